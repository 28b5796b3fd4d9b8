#pragma once

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gsptri/characters/character.hpp"
#include "gsptri/characters/dominance.hpp"
#include "gsptri/characters/phi_module.hpp"
#include "gsptri/config.hpp"
#include "gsptri/error.hpp"
#include "gsptri/io/json_io.hpp"
#include "gsptri/saturation/certificate.hpp"
#include "gsptri/weyl/weyl_group.hpp"

namespace gsptri::cli {

using json = nlohmann::json;

enum ExitCode : int { kPass = 0, kCertifiedFailure = 1, kUsage = 2, kDataIntegrity = 3 };

// A finished command: the report, its exit code, and optional text output
// (used by `weyl --format table`).
struct Outcome {
  json report;
  int exit_code = kPass;
  std::string text;
};

inline json make_report(const std::string& command, json inputs, json results) {
  return {{"command", command}, {"inputs", std::move(inputs)}, {"results", std::move(results)},
          {"tool_version", kToolVersion}, {"duration_ms", 0}};
}

// Runs body() and stamps the wall time.  duration_ms is the only field
// outside the determinism contract.
template <class F>
Outcome timed(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out = body();
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  out.report["duration_ms"] = ms;
  return out;
}

// Serializes with sorted keys (nlohmann objects are ordered maps) and a
// trailing newline.
inline std::string render(const json& report) { return report.dump(2) + "\n"; }

inline json strip_duration(json report) {
  report.erase("duration_ms");
  return report;
}

// ---------------------------------------------------------------------------

inline Outcome cmd_weyl(int n, const std::string& format = "json") {
  if (format != "json" && format != "table") throw ArgumentError("weyl: --format must be json or table");
  if (n < 1 || n > weyl_bound())
    throw ArgumentError("weyl: n must lie in [1, " + std::to_string(weyl_bound()) + "], got " + std::to_string(n));
  return timed([&] {
    const WeylGroup g = weyl_group(n);
    json gens = json::array();
    for (const auto& s : weyl_generators(n)) gens.push_back(s);
    json elements = json::array();
    for (const auto& w : g.elements) elements.push_back(io::to_json(w));
    json results = {{"n", n},
                    {"size", g.size()},
                    {"expected_size", hyperoctahedral_order(n)},
                    {"closure_depth", g.closure_depth},
                    {"generators", gens},
                    {"elements", elements}};
    Outcome o{make_report("weyl", {{"n", n}, {"format", format}}, results), kPass, {}};
    if (format == "table") {
      std::ostringstream t;
      t << "# W(GSp_" << 2 * n << ", T): " << g.size() << " elements, closure depth " << g.closure_depth << "\n";
      for (const auto& w : g.elements) {
        t << perm_to_string(w.sigma) << "  signs ";
        for (std::size_t i = 0; i < w.signs.size(); ++i) t << (w.signs[i] > 0 ? '+' : '-');
        t << "  sim " << w.similitude << "\n";
      }
      o.text = t.str();
    }
    return o;
  });
}

// ---------------------------------------------------------------------------

namespace detail {

struct ParsedPhi {
  PhiModuleData data;
  std::optional<SymplecticPhiData> symplectic;
  GroupKind group() const { return symplectic ? GroupKind::GSp : GroupKind::GL; }
};

inline ParsedPhi parse_phi(const json& j) {
  ParsedPhi p;
  if (io::is_symplectic_json(j)) {
    p.symplectic = io::symplectic_from_json(j);
    p.data = p.symplectic->base;
  } else {
    p.data = io::phi_module_from_json(j);
  }
  return p;
}

inline std::vector<Refinement> refinements_of(const ParsedPhi& p) {
  if (!p.data.refinements.empty()) return p.data.refinements;
  return p.symplectic ? enumerate_symplectic_refinements(*p.symplectic) : enumerate_gl_refinements(p.data);
}

// Shape plus Sigma labels for inputs that carry characters directly.
inline PadicFieldShape character_shape(const json& j) {
  std::vector<std::string> sigma;
  if (j.contains("sigma")) sigma = io::get_field<std::vector<std::string>>(j, "sigma", "input");
  return io::shape_from_json(j, sigma);
}

inline json check_to_json(const CheckResult& r, const std::string& predicate) {
  json j = io::to_json(r);
  j["predicate"] = predicate;
  return j;
}

}  // namespace detail

inline Outcome cmd_refinements(const json& input) {
  return timed([&] {
    const auto parsed = detail::parse_phi(input);
    const auto& d = parsed.data;
    const auto sigma = d.shape.sigma;
    const bool regular = is_regular_ht(d);
    json list = json::array();
    for (const auto& r : detail::refinements_of(parsed)) {
      const auto params = berger_parameter(d, r);
      json flags = {{"regular_parameter", is_regular_parameter(params, d.shape)}};
      flags["noncritical"] = regular ? json(is_noncritical(d, r, parsed.group())) : json(nullptr);
      json entry = io::to_json(r, sigma);
      entry["parameter"] = io::to_json(params, sigma);
      entry["flags"] = flags;
      list.push_back(entry);
    }
    json results = {{"group", to_string(parsed.group())}, {"m", d.m()}, {"count", list.size()}, {"refinements", list}};
    if (parsed.symplectic) results["expected_count"] = hyperoctahedral_order(parsed.symplectic->n());
    return Outcome{make_report("refinements", input, results), kPass, {}};
  });
}

inline const std::vector<std::string> kCheckKinds = {"regular", "generic", "noncritical", "benign", "ext-saturated", "h-surjectivity"};

inline Outcome cmd_check(const std::string& kind, const json& input) {
  if (std::find(kCheckKinds.begin(), kCheckKinds.end(), kind) == kCheckKinds.end())
    throw ArgumentError("check: unknown kind '" + kind + "'");
  return timed([&] {
    CheckResult r;
    std::string predicate;
    if (kind == "regular") {
      io::require_object(input, "check regular");
      io::reject_unknown(input, {"p", "f", "e", "sigma", "parameter"}, "check regular");
      const auto shape = detail::character_shape(input);
      if (!input.contains("parameter")) throw ArgumentError("check regular: missing key 'parameter'");
      const auto params = io::characters_from_json(input.at("parameter"), shape.sigma, "parameter");
      predicate = "is_regular_parameter";
      for (std::size_t i = 0; i < params.size() && r.verdict; ++i)
        for (std::size_t j = i + 1; j < params.size() && r.verdict; ++j)
          if (!is_regular(params[i] / params[j], shape))
            r = {false, "regular_parameter", "delta_" + std::to_string(i + 1) + " / delta_" + std::to_string(j + 1) + " is not regular"};
    } else if (kind == "ext-saturated") {
      io::require_object(input, "check ext-saturated");
      io::reject_unknown(input, {"p", "f", "e", "sigma", "k", "parameter"}, "check ext-saturated");
      const auto shape = detail::character_shape(input);
      if (!input.contains("k") || !input.contains("parameter")) throw ArgumentError("check ext-saturated: needs 'k' and 'parameter'");
      std::vector<std::vector<int>> k;
      io::require_object(input.at("k"), "check ext-saturated.k");
      for (const auto& tau : shape.sigma) k.push_back(io::get_field<std::vector<int>>(input.at("k"), tau, "check ext-saturated.k"));
      const auto params = io::characters_from_json(input.at("parameter"), shape.sigma, "parameter");
      predicate = "ext_saturated_check";
      r = check_ext_saturated(shape, k, params);
    } else if (kind == "h-surjectivity") {
      io::require_object(input, "check h-surjectivity");
      io::reject_unknown(input, {"p", "f", "e", "sigma", "parameter", "sub_parameter"}, "check h-surjectivity");
      const auto shape = detail::character_shape(input);
      if (!input.contains("parameter") || !input.contains("sub_parameter"))
        throw ArgumentError("check h-surjectivity: needs 'parameter' and 'sub_parameter'");
      const auto d = io::characters_from_json(input.at("parameter"), shape.sigma, "parameter");
      const auto dp = io::characters_from_json(input.at("sub_parameter"), shape.sigma, "sub_parameter");
      predicate = "h_surjectivity_check";
      r = check_h_surjectivity(d, dp, shape);
    } else {
      const auto parsed = detail::parse_phi(input);
      const auto& d = parsed.data;
      if (kind == "generic") {
        predicate = "is_phi_generic";
        if (!is_phi_generic(d)) r = {false, "phi_generic", "eigenvalues repeat or a ratio equals p^f"};
      } else if (kind == "noncritical") {
        predicate = "is_noncritical";
        if (!is_regular_ht(d)) {
          r = {false, "regular_ht", "Hodge-Tate type is not strictly decreasing"};
        } else {
          const auto refs = detail::refinements_of(parsed);
          for (std::size_t i = 0; i < refs.size() && r.verdict; ++i)
            if (!is_noncritical(d, refs[i], parsed.group())) r = {false, "noncritical", "refinement " + std::to_string(i) + " is critical"};
        }
      } else {
        predicate = "is_benign";
        const auto refs = detail::refinements_of(parsed);
        r = check_benign(d, parsed.group(), &refs);
      }
    }
    json results = detail::check_to_json(r, predicate);
    results["kind"] = kind;
    return Outcome{make_report("check", {{"kind", kind}, {"input", input}}, results), r.verdict ? kPass : kCertifiedFailure, {}};
  });
}

// ---------------------------------------------------------------------------

struct SaturationArgs {
  std::string group = "gl";
  int size = 2;
  int sigma = 1;
  std::string weights;  // "k1,k2,...;k1,k2,..." one list per embedding
  std::uint64_t seed = 0;
  std::string mode = "transpositions";
  std::int64_t p = 3;
};

// One comma list per embedding, lists separated by ';'.  Returns the table
// indexed [i][tau].
inline WeightTable parse_weights_csv(const std::string& csv, int sigma) {
  std::vector<std::vector<int>> per_tau;
  std::stringstream lists(csv);
  std::string list;
  while (std::getline(lists, list, ';')) {
    std::vector<int> row;
    std::stringstream items(list);
    std::string item;
    while (std::getline(items, item, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stoi(item, &used));
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw ArgumentError("--weights: '" + item + "' is not an integer");
      }
    }
    per_tau.push_back(std::move(row));
  }
  if (static_cast<int>(per_tau.size()) != sigma)
    throw ArgumentError("--weights: expected " + std::to_string(sigma) + " ';'-separated lists, got " + std::to_string(per_tau.size()));
  const std::size_t len = per_tau.front().size();
  for (const auto& row : per_tau)
    if (row.size() != len || len == 0) throw ArgumentError("--weights: every list needs the same nonzero length");
  WeightTable k(len, std::vector<int>(static_cast<std::size_t>(sigma)));
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t t = 0; t < per_tau.size(); ++t) k[i][t] = per_tau[t][i];
  return k;
}

inline WeightTable default_weights(int length, int sigma) {
  WeightTable k(static_cast<std::size_t>(length), std::vector<int>(static_cast<std::size_t>(sigma)));
  for (int i = 0; i < length; ++i)
    for (auto& x : k[static_cast<std::size_t>(i)]) x = length - 1 - i;
  return k;
}

inline json h_conditions_json(GroupKind g, int m, const PadicFieldShape& shape, const SpanCertificate& cert) {
  json out = json::object();
  const auto generic = generic_eigenvalues(g, m, shape, cert.seed);
  const auto forced = forced_eigenvalues(g, m, shape, cert.seed);
  auto entry = [&](const std::vector<Rational>& phi) {
    json e = io::to_json(h_conditions_for_adjoint(frame_parameter(cert.weights, phi), cert, shape));
    json vals = json::array();
    for (const auto& x : phi) vals.push_back(x.to_string());
    e["eigenvalues"] = vals;
    return e;
  };
  out["generic"] = entry(generic);
  out["forced"] = forced ? entry(*forced) : json(nullptr);
  return out;
}

inline Outcome cmd_verify_saturation(const SaturationArgs& a) {
  if (a.group != "gl" && a.group != "gsp") throw ArgumentError("verify-saturation: --group must be gl or gsp");
  if (a.mode != "full" && a.mode != "transpositions") throw ArgumentError("verify-saturation: --mode must be full or transpositions");
  if (a.sigma < 1) throw ArgumentError("verify-saturation: --sigma must be positive");
  const GroupKind g = a.group == "gl" ? GroupKind::GL : GroupKind::GSp;
  const int bound = g == GroupKind::GL ? gl_bound() : gsp_bound();
  if (a.size < 1 || a.size > bound)
    throw ArgumentError("verify-saturation: size must lie in [1, " + std::to_string(bound) + "], got " + std::to_string(a.size));
  const int m = g == GroupKind::GL ? a.size : 2 * a.size;
  const PadicFieldShape shape = PadicFieldShape::make(a.p, 1, a.sigma);
  const WeightTable weights = a.weights.empty() ? default_weights(m, a.sigma) : parse_weights_csv(a.weights, a.sigma);

  json inputs = {{"group", a.group}, {"size", a.size}, {"sigma", a.sigma}, {"weights", weights},
                 {"seed", std::to_string(a.seed)}, {"mode", a.mode}, {"p", a.p}};
  return timed([&] {
    const SpanCertificate cert = g == GroupKind::GL
                                     ? verify_span_gl(a.size, shape, weights, a.seed, a.mode == "full" ? WeylMode::Full : WeylMode::Transpositions)
                                     : verify_span_gsp(a.size, shape, weights, a.seed);
    json results = {{"certificate", io::to_json(cert)},
                    {"verdict", cert.verdict ? "pass" : "fail"},
                    {"rank", cert.final_rank},
                    {"stage_count", cert.stages.size()},
                    {"h_conditions", h_conditions_json(g, m, shape, cert)}};
    return Outcome{make_report("verify-saturation", inputs, results), cert.verdict ? kPass : kCertifiedFailure, {}};
  });
}

// ---------------------------------------------------------------------------

inline Outcome cmd_dims(int n, int degree) {
  if (n < 1) throw ArgumentError("dims: n must be positive");
  if (degree < 1) throw ArgumentError("dims: degree must be positive");
  return timed([&] {
    const long dim_g = 2L * n * n + n + 1;
    const long per_degree = static_cast<long>(n + 1) * (n + 2) / 2;
    // |W| = 2^n n! overflows 64 bits early, so it goes out as a string.
    mpz_class order = 1;
    for (int i = 1; i <= n; ++i) order *= 2 * i;
    json results = {{"dim_gsp", dim_g},
                    {"parameter_term", per_degree},
                    {"dim_xtri", dim_g + static_cast<long>(degree) * per_degree},
                    {"weyl_order", order.get_str()}};
    return Outcome{make_report("dims", {{"n", n}, {"degree", degree}}, results), kPass, {}};
  });
}

}  // namespace gsptri::cli
