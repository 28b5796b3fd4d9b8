#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gsptri/characters/character.hpp"
#include "gsptri/characters/phi_module.hpp"
#include "gsptri/error.hpp"
#include "gsptri/exact/laurent.hpp"
#include "gsptri/exact/rational.hpp"
#include "gsptri/saturation/certificate.hpp"
#include "gsptri/weyl/weyl_group.hpp"

namespace gsptri::io {

using json = nlohmann::json;

inline json to_json(const Rational& r) { return r.to_string(); }

inline Rational rational_from_json(const json& j, const std::string& what) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ArgumentError(what + ": expected a rational string or integer");
}

// [{"exp": {"tau0": -1, ...}, "coeff": "a/b"}, ...] in term order.
inline json to_json(const LaurentPoly& p, const std::vector<std::string>& sigma) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json exp = json::object();
    for (std::size_t i = 0; i < e.size(); ++i) exp[i < sigma.size() ? sigma[i] : "tau" + std::to_string(i)] = e[i];
    terms.push_back({{"exp", exp}, {"coeff", c.to_string()}});
  }
  return terms;
}

inline std::vector<std::string> default_sigma(std::size_t count) {
  std::vector<std::string> s;
  for (std::size_t i = 0; i < count; ++i) s.push_back("tau" + std::to_string(i));
  return s;
}

inline json to_json(const Character& d, const std::vector<std::string>& sigma) {
  json k = json::object();
  for (std::size_t t = 0; t < d.weights.size(); ++t) k[sigma[t]] = d.weights[t];
  return {{"weights", k}, {"unramified_value", d.value.to_string()}, {"text", d.to_string()}};
}

inline json to_json(const std::vector<Character>& ds, const std::vector<std::string>& sigma) {
  json a = json::array();
  for (const auto& d : ds) a.push_back(to_json(d, sigma));
  return a;
}

inline json to_json(const WeylElement& w) {
  return {{"perm", w.sigma}, {"signs", w.signs}, {"similitude", w.similitude}};
}

inline json to_json(const Refinement& r, const std::vector<std::string>& sigma) {
  json wo = json::object();
  for (std::size_t t = 0; t < r.weight_order.size(); ++t) wo[sigma[t]] = r.weight_order[t];
  return {{"eigenvalue_order", r.eigenvalue_order}, {"weight_order", wo}};
}

inline json to_json(const CheckResult& c) {
  json j = {{"verdict", c.verdict}};
  if (!c.verdict) {
    j["violated"] = c.violated;
    j["detail"] = c.detail;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Parsing.  Unknown keys are rejected so that typos surface as usage errors.

inline void require_object(const json& j, const std::string& what) {
  if (!j.is_object()) throw ArgumentError(what + ": expected a JSON object");
}

inline void reject_unknown(const json& j, const std::vector<std::string>& allowed, const std::string& what) {
  for (const auto& [key, value] : j.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ArgumentError(what + ": unknown key '" + key + "'");
}

template <class T>
T get_field(const json& j, const std::string& key, const std::string& what) {
  if (!j.contains(key)) throw ArgumentError(what + ": missing key '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ArgumentError(what + ": bad value for '" + key + "'");
  }
}

inline PadicFieldShape shape_from_json(const json& j, const std::vector<std::string>& sigma) {
  PadicFieldShape s;
  s.p = get_field<std::int64_t>(j, "p", "shape");
  s.f = j.contains("f") ? get_field<int>(j, "f", "shape") : 1;
  s.e = j.contains("e") ? get_field<int>(j, "e", "shape") : 1;
  s.sigma = sigma.empty() ? default_sigma(static_cast<std::size_t>(std::max(0, s.e * s.f))) : sigma;
  s.validate();
  return s;
}

inline Perm perm_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) throw ArgumentError(what + ": expected an array");
  Perm p;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ArgumentError(what + ": expected integers");
    p.push_back(x.get<int>());
  }
  return p;
}

// Labels of Sigma in the order of the ht_type keys.
inline std::vector<std::string> sigma_from(const json& ht) {
  std::vector<std::string> s;
  for (const auto& [key, value] : ht.items()) s.push_back(key);
  return s;
}

inline Refinement refinement_from_json(const json& j, const std::vector<std::string>& sigma) {
  require_object(j, "refinement");
  reject_unknown(j, {"eigenvalue_order", "weight_order"}, "refinement");
  Refinement r;
  r.eigenvalue_order = perm_from_json(j.at("eigenvalue_order"), "refinement.eigenvalue_order");
  if (j.contains("weight_order")) {
    const json& wo = j.at("weight_order");
    require_object(wo, "refinement.weight_order");
    for (const auto& tau : sigma) {
      if (!wo.contains(tau)) throw ArgumentError("refinement.weight_order: missing " + tau);
      r.weight_order.push_back(perm_from_json(wo.at(tau), "refinement.weight_order"));
    }
  } else {
    r.weight_order.assign(sigma.size(), identity_perm(static_cast<int>(r.eigenvalue_order.size())));
  }
  return r;
}

inline const std::vector<std::string> kPhiKeys = {"p", "f", "e", "eigenvalues", "ht_type", "refinements", "refinement", "group"};
inline const std::vector<std::string> kSymplecticKeys = {"p", "f", "e", "eigenvalues", "ht_type", "refinements", "refinement", "group", "gamma", "pairing"};

inline PhiModuleData phi_module_from_json(const json& j, bool strict = true) {
  require_object(j, "phi-module");
  if (strict) reject_unknown(j, kPhiKeys, "phi-module");
  const json& ht = j.contains("ht_type") ? j.at("ht_type") : throw ArgumentError("phi-module: missing key 'ht_type'");
  require_object(ht, "phi-module.ht_type");
  PhiModuleData d;
  const auto sigma = sigma_from(ht);
  d.shape = shape_from_json(j, sigma);
  if (!j.contains("eigenvalues") || !j.at("eigenvalues").is_array()) throw ArgumentError("phi-module: 'eigenvalues' must be an array");
  for (const auto& x : j.at("eigenvalues")) d.eigenvalues.push_back(rational_from_json(x, "phi-module.eigenvalues"));
  for (const auto& tau : sigma) d.ht_type.push_back(get_field<std::vector<int>>(ht, tau, "phi-module.ht_type"));
  if (j.contains("refinements"))
    for (const auto& r : j.at("refinements")) d.refinements.push_back(refinement_from_json(r, sigma));
  if (j.contains("refinement")) d.refinements.push_back(refinement_from_json(j.at("refinement"), sigma));
  d.validate();
  return d;
}

inline bool is_symplectic_json(const json& j) { return j.is_object() && (j.contains("gamma") || j.contains("pairing")); }

inline SymplecticPhiData symplectic_from_json(const json& j) {
  reject_unknown(j, kSymplecticKeys, "symplectic data");
  SymplecticPhiData s;
  s.base = phi_module_from_json(j, false);
  if (!j.contains("gamma")) throw ArgumentError("symplectic data: missing key 'gamma'");
  s.gamma = rational_from_json(j.at("gamma"), "symplectic data.gamma");
  if (!j.contains("pairing")) throw ArgumentError("symplectic data: missing key 'pairing'");
  s.pairing = perm_from_json(j.at("pairing"), "symplectic data.pairing");
  s.validate();
  return s;
}

inline Character character_from_json(const json& j, const std::vector<std::string>& sigma, const std::string& what) {
  require_object(j, what);
  reject_unknown(j, {"weights", "value"}, what);
  if (!j.contains("weights") || !j.contains("value")) throw ArgumentError(what + ": needs 'weights' and 'value'");
  const json& w = j.at("weights");
  std::vector<int> k;
  if (w.is_array()) {
    k = get_field<std::vector<int>>(j, "weights", what);
  } else {
    require_object(w, what + ".weights");
    for (const auto& tau : sigma) k.push_back(get_field<int>(w, tau, what + ".weights"));
  }
  if (k.size() != sigma.size()) throw ArgumentError(what + ": weight count != |Sigma|");
  return Character(std::move(k), rational_from_json(j.at("value"), what + ".value"));
}

inline std::vector<Character> characters_from_json(const json& j, const std::vector<std::string>& sigma, const std::string& what) {
  if (!j.is_array()) throw ArgumentError(what + ": expected an array of characters");
  std::vector<Character> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(character_from_json(j[i], sigma, what + "[" + std::to_string(i) + "]"));
  return out;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open input file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ArgumentError("input '" + path + "' is not valid JSON: " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Certificates.

inline json witness_to_json(const SpanWitness& w, const std::vector<std::string>& sigma) {
  json j = {{"target", w.target}, {"found", w.found}, {"verified", w.verified}};
  if (w.found) {
    j["monomial"] = to_json(w.data.monomial, sigma);
    json coeffs = json::array();
    for (std::size_t g = 0; g < w.data.coefficients.size(); ++g) {
      if (w.data.coefficients[g].is_zero()) continue;
      coeffs.push_back({{"generator", g}, {"coeff", to_json(w.data.coefficients[g].as_laurent(), sigma)}});
    }
    j["coefficients"] = coeffs;
  }
  return j;
}

inline json to_json(const SpanCertificate& c) {
  const auto sigma = default_sigma(c.sigma);
  json stages = json::array();
  for (const auto& s : c.stages) {
    json gens = json::array();
    for (const auto& g : s.generators) gens.push_back({{"w", g.w}, {"generator", g.describe()}, {"target", g.target}});
    stages.push_back({{"label", s.label}, {"rank", s.rank}, {"expected", s.expected}, {"generators", gens}});
  }
  json witnesses = json::array();
  for (const auto& w : c.witnesses) witnesses.push_back(witness_to_json(w, sigma));
  json j = {{"group", to_string(c.group)},
            {c.group == GroupKind::GL ? "m" : "n", c.size},
            {"sigma", c.sigma},
            {"seed", std::to_string(c.seed)},
            {"mode", to_string(c.mode)},
            {"weights", c.weights},
            {"coordinates", c.coordinates},
            {"stages", stages},
            {"rank", c.final_rank},
            {"expected_rank", c.expected_rank},
            {"monomial_pivots", c.monomial_pivots},
            {"witnesses", witnesses},
            {"verdict", c.verdict ? "pass" : "fail"}};
  if (c.bareiss_rank) j["bareiss_rank"] = *c.bareiss_rank;
  if (c.group == GroupKind::GSp) {
    json sw = json::array();
    for (const auto& w : c.siegel_witnesses) sw.push_back(witness_to_json(w, sigma));
    j["siegel_witnesses"] = sw;
  }
  return j;
}

}  // namespace gsptri::io
