#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "wpoly/runner.hpp"

namespace {

using namespace wpoly;

Weight parse_lambda(const std::string& text, int n) {
  Weight lam;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t pos = 0;
      lam.push_back(std::stoi(part, &pos));
      if (pos != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw ConfigError("bad lambda entry: " + part);
    }
  }
  if (static_cast<int>(lam.size()) != n)
    throw ConfigError("lambda needs " + std::to_string(n) + " entries, got " +
                      std::to_string(lam.size()));
  return lam;
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + output);
  out << text;
}

struct Flags {
  std::string config_path;
  std::string n, t0, u0, t, tn, un, degree, lambda_sum, truncation, panels, nodes, tol_scale;
  std::string output;
};

RunConfig build_config(const Flags& f) {
  RunConfig cfg;
  if (!f.config_path.empty()) cfg = load_config(f.config_path);
  // Flags override file values.
  std::pair<const char*, const std::string*> entries[] = {
      {"n", &f.n},         {"t0", &f.t0},       {"u0", &f.u0},
      {"t", &f.t},         {"tn", &f.tn},       {"un", &f.un},
      {"degree", &f.degree}, {"lambda_sum", &f.lambda_sum},
      {"truncation", &f.truncation}, {"panels", &f.panels}, {"nodes", &f.nodes},
      {"tol_scale", &f.tol_scale}};
  for (const auto& [key, value] : entries)
    if (!value->empty()) apply_config_entry(cfg, key, *value);
  if (!f.output.empty()) cfg.output = f.output;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact nonsymmetric and symmetric multivariable Wilson polynomials:\n"
               "difference-reflection operators, spectral data, exact identity\n"
               "verification and Gamma-weight quadrature cross-checks."};
  app.require_subcommand(1);

  Flags flags;
  app.add_option("--config", flags.config_path, "flat key=value config file");
  app.add_option("--n", flags.n, "rank (>= 2)");
  app.add_option("--t0", flags.t0, "multiplicity t0 as p/q");
  app.add_option("--u0", flags.u0, "multiplicity u0 as p/q");
  app.add_option("--t", flags.t, "multiplicity t as p/q");
  app.add_option("--tn", flags.tn, "multiplicity tn as p/q");
  app.add_option("--un", flags.un, "multiplicity un as p/q");
  app.add_option("--output", flags.output, "write JSON here instead of stdout");

  std::string lambda_text;
  auto* compute = app.add_subcommand("compute", "nonsymmetric polynomial record");
  compute->fallthrough();
  compute->add_option("--lambda", lambda_text, "weight, e.g. \"-1,0\"")->required();

  std::string sym_lambda_text;
  auto* compute_sym = app.add_subcommand("compute-symmetric", "symmetric polynomial record");
  compute_sym->fallthrough();
  compute_sym->add_option("--lambda", sym_lambda_text, "dominant weight")->required();

  int range = 2;
  auto* spectrum = app.add_subcommand("spectrum", "spectral points over a range");
  spectrum->fallthrough();
  spectrum->add_option("--range", range, "max sum |lambda_i|");

  std::string verify_suite;
  auto* verify = app.add_subcommand("verify", "exact verification suites");
  verify->fallthrough();
  verify->add_option("--suite", verify_suite,
                     "relations|gdaha|eigen|duality|evaluation|norms|fourier|symmetric")
      ->required();
  verify->add_option("--degree", flags.degree, "monomial degree bound for operator identities");
  verify->add_option("--lambda-sum", flags.lambda_sum, "weight range for polynomial suites");
  bool serial = false;
  verify->add_flag("--serial", serial, "disable the parallel verifier");

  std::string quad_suite;
  auto* quadrature = app.add_subcommand("quadrature", "numeric cross-checks (n = 2)");
  quadrature->fallthrough();
  quadrature->add_option("--suite", quad_suite, "constant|orthogonality|norms|selfadjoint")
      ->required();
  quadrature->add_option("--truncation", flags.truncation, "half-width T of the y-interval");
  quadrature->add_option("--panels", flags.panels, "panels per axis");
  quadrature->add_option("--nodes", flags.nodes, "Gauss-Legendre nodes per panel");
  quadrature->add_option("--tol-scale", flags.tol_scale,
                         "scale factor on the numeric tolerances");

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg = build_config(flags);
    if (compute->parsed()) {
      emit(compute_record_json(parse_lambda(lambda_text, cfg.params.n), cfg), cfg.output);
      return 0;
    }
    if (compute_sym->parsed()) {
      Weight lam = parse_lambda(sym_lambda_text, cfg.params.n);
      if (!is_dominant(lam)) throw ConfigError("compute-symmetric needs a dominant weight");
      emit(compute_symmetric_json(lam, cfg), cfg.output);
      return 0;
    }
    if (spectrum->parsed()) {
      emit(spectrum_json(range, cfg), cfg.output);
      return 0;
    }
    if (verify->parsed()) {
      auto report =
          run_verify_suite(verify_suite, cfg, serial ? Exec::Serial : Exec::Parallel);
      emit(report_to_json(report, cfg), cfg.output);
      return report.ok() ? 0 : 1;
    }
    if (quadrature->parsed()) {
      auto report = run_quadrature_suite(quad_suite, cfg);
      emit(report_to_json(report, cfg), cfg.output);
      return report.ok() ? 0 : 1;
    }
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateParameterError& e) {
    std::cerr << "degenerate parameters: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
