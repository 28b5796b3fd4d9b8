// gsptri: batch front end.  Every subcommand prints one JSON report on
// stdout; diagnostics go to stderr.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gsptri/cli/commands.hpp"
#include "gsptri/io/json_io.hpp"

namespace {

using gsptri::cli::Outcome;

int emit(const Outcome& o) {
  if (!o.text.empty()) std::cout << o.text;
  else std::cout << gsptri::cli::render(o.report);
  return o.exit_code;
}

int fail(int code, const std::string& kind, const std::string& what) {
  std::cerr << "gsptri: " << kind << ": " << what << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifiers for GSp_2n trianguline combinatorics"};
  app.set_version_flag("--version", std::string(gsptri::kToolVersion));
  app.require_subcommand(1);

  int weyl_n = 0;
  std::string weyl_format = "json";
  auto* weyl = app.add_subcommand("weyl", "Enumerate W(GSp_2n, T) with signed representatives");
  weyl->add_option("--n", weyl_n, "n")->required();
  weyl->add_option("--format", weyl_format, "json or table")->check(CLI::IsMember({"json", "table"}));

  std::string ref_input;
  auto* refinements = app.add_subcommand("refinements", "List refinements and Berger parameters");
  refinements->add_option("--input", ref_input, "phi-module JSON")->required();

  std::string check_kind;
  std::string check_input;
  auto* check = app.add_subcommand("check", "Evaluate one predicate");
  check->add_option("--kind", check_kind, "predicate")->required()->check(CLI::IsMember(gsptri::cli::kCheckKinds));
  check->add_option("--input", check_input, "input JSON")->required();

  gsptri::cli::SaturationArgs sat;
  std::string seed_text = "0";
  auto* verify = app.add_subcommand("verify-saturation", "Build and check a saturation certificate");
  verify->add_option("--group", sat.group, "gl or gsp")->required()->check(CLI::IsMember({"gl", "gsp"}));
  auto* m_opt = verify->add_option("--m", sat.size, "GL size m");
  auto* n_opt = verify->add_option("--n", sat.size, "GSp size n");
  m_opt->excludes(n_opt);
  verify->add_option("--sigma", sat.sigma, "|Sigma|");
  verify->add_option("--weights", sat.weights, "k_1,...,k_m per embedding, ';' between embeddings");
  verify->add_option("--seed", seed_text, "64-bit seed");
  verify->add_option("--mode", sat.mode, "Weyl generators for GL")->check(CLI::IsMember({"full", "transpositions"}));
  verify->add_option("--p", sat.p, "residue characteristic");

  int dims_n = 0;
  int dims_degree = 0;
  auto* dims = app.add_subcommand("dims", "Dimension of GSp_2n and of X_tri");
  dims->add_option("--n", dims_n, "n")->required();
  dims->add_option("--degree", dims_degree, "[K:Q_p]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : gsptri::cli::kUsage;
  }

  try {
    if (*weyl) return emit(gsptri::cli::cmd_weyl(weyl_n, weyl_format));
    if (*refinements) return emit(gsptri::cli::cmd_refinements(gsptri::io::read_json_file(ref_input)));
    if (*check) return emit(gsptri::cli::cmd_check(check_kind, gsptri::io::read_json_file(check_input)));
    if (*verify) {
      if (!*m_opt && !*n_opt) throw gsptri::ArgumentError("verify-saturation: give --m (gl) or --n (gsp)");
      if ((sat.group == "gl") != static_cast<bool>(*m_opt))
        throw gsptri::ArgumentError("verify-saturation: use --m with gl and --n with gsp");
      try {
        std::size_t used = 0;
        sat.seed = std::stoull(seed_text, &used);
        if (used != seed_text.size() || seed_text.front() == '-') throw std::invalid_argument(seed_text);
      } catch (const std::exception&) {
        throw gsptri::ArgumentError("--seed must be an unsigned 64-bit integer");
      }
      return emit(gsptri::cli::cmd_verify_saturation(sat));
    }
    if (*dims) return emit(gsptri::cli::cmd_dims(dims_n, dims_degree));
  } catch (const gsptri::DataIntegrityError& e) {
    return fail(gsptri::cli::kDataIntegrity, "data integrity", e.what());
  } catch (const gsptri::ArgumentError& e) {
    return fail(gsptri::cli::kUsage, "usage", e.what());
  } catch (const gsptri::PreconditionError& e) {
    return fail(gsptri::cli::kUsage, "precondition", e.what());
  } catch (const gsptri::ResourceError& e) {
    return fail(gsptri::cli::kUsage, "resource", e.what());
  } catch (const gsptri::DomainError& e) {
    return fail(gsptri::cli::kUsage, "domain", e.what());
  } catch (const std::exception& e) {
    return fail(gsptri::cli::kUsage, "internal", e.what());
  }
  return gsptri::cli::kUsage;
}
