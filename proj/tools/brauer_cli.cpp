// Command-line front end: reproducible experiments over the diagram algebra
// with machine-readable JSON/CSV output.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "brauer/brauer_linalg.hpp"
#include "brauer/designs.hpp"
#include "brauer/errors.hpp"
#include "brauer/json_io.hpp"
#include "brauer/sampling.hpp"
#include "brauer/tensor_rep.hpp"
#include "brauer/verify.hpp"
#include "brauer/version.hpp"

namespace {

using brauer::Json;

struct RunConfig {
  int t = 2;
  int d = 2;
  std::int64_t n_samples = 10000;
  std::uint64_t seed = 12345;
  int workers = 0;  // 0 = available parallelism
  std::size_t cap = brauer::kDefaultTensorCap;
  std::string kind = "unitary-haar";
  std::string format = "json";
  std::string output;
};

int effective_workers(const RunConfig& config) {
  if (config.workers > 0) return config.workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

Json envelope(const std::string& command, const RunConfig& config) {
  return Json{{"command", command},
              {"version", brauer::kVersion},
              {"t", config.t},
              {"d", config.d},
              {"seed", config.seed}};
}

Json run_gram(const RunConfig& config) {
  Json out = envelope("gram", config);
  out.update(brauer::gram_to_json(brauer::gram_matrix(config.t, config.d)));
  return out;
}

Json run_weingarten(const RunConfig& config) {
  Json out = envelope("weingarten", config);
  out.update(brauer::weingarten_to_json(brauer::weingarten_matrix(config.t, config.d)));
  return out;
}

Json run_trace_distance(const RunConfig& config) {
  const brauer::DenseOperator real_moment = brauer::rho_br(config.d, config.t, config.cap);
  const brauer::DenseOperator complex_moment = brauer::rho_sym(config.d, config.t, config.cap);
  const double numeric = brauer::trace_distance(real_moment, complex_moment);
  const brauer::Rational exact = brauer::closed_form_distance(config.d, config.t);
  Json out = envelope("trace-distance", config);
  out["trace_distance_numeric"] = numeric;
  out["closed_form"] = brauer::rational_to_json(exact);
  out["closed_form_value"] = exact.to_double();
  out["abs_difference"] = std::abs(numeric - exact.to_double());
  out["one_norm"] = 2.0 * numeric;
  return out;
}

Json run_design_check(const RunConfig& config) {
  const brauer::StateVector psi = brauer::construct_design_state(config.d);
  const brauer::MomentReport report = brauer::exact_design_check(psi, config.t, config.cap);
  Json out = envelope("design-check", config);
  Json state = Json::array();
  for (Eigen::Index k = 0; k < psi.amplitudes.size(); ++k)
    state.push_back(Json::array({psi.amplitudes[k].real(), psi.amplitudes[k].imag()}));
  out["seed_state"] = std::move(state);
  out["conjugate_overlap_squared"] =
      brauer::conjugate_overlap(psi) * brauer::conjugate_overlap(psi);
  out.update(brauer::moment_report_to_json(report));
  return out;
}

Json run_constraints(const RunConfig& config) {
  Json out = envelope("constraints", config);
  out.update(brauer::constraint_set_to_json(brauer::design_constraints(config.t, config.d)));
  return out;
}

Json run_impossibility(const RunConfig& config) {
  Json out = envelope("impossibility", config);
  out.update(brauer::constraint_set_to_json(brauer::impossibility_report(config.t, config.d)));
  return out;
}

Json run_sample_moment(const RunConfig& config) {
  const int workers = effective_workers(config);
  brauer::EnsembleKind kind;
  if (config.kind == "orthogonal-orbit") {
    kind = brauer::EnsembleKind::orthogonal_orbit;
  } else if (config.kind == "unitary-haar") {
    kind = brauer::EnsembleKind::unitary_haar;
  } else {
    throw CLI::ValidationError("--kind must be orthogonal-orbit or unitary-haar");
  }
  const brauer::StateVector zero =
      brauer::StateVector::make(Eigen::VectorXcd::Unit(config.d, 0));
  const brauer::EnsembleSpec spec{kind, zero, config.d, config.t};
  const brauer::DenseOperator moment =
      brauer::empirical_moment(spec, config.n_samples, config.seed, workers, config.cap);

  const brauer::DenseOperator reference =
      kind == brauer::EnsembleKind::orthogonal_orbit ? brauer::rho_br(config.d, config.t, config.cap)
                                                     : brauer::rho_sym(config.d, config.t, config.cap);
  Json out = envelope("sample-moment", config);
  out["kind"] = config.kind;
  out["n_samples"] = config.n_samples;
  out["workers"] = workers;
  out["trace"] = moment.entries.trace().real();
  out["max_abs_deviation_from_exact"] =
      (moment.entries - reference.entries).cwiseAbs().maxCoeff();
  out.update(brauer::operator_to_json(moment));
  return out;
}

Json run_helstrom(const RunConfig& config) {
  const int workers = effective_workers(config);
  const brauer::ExperimentResult result = brauer::helstrom_experiment(
      config.t, config.d, config.n_samples, config.seed, workers, config.cap);
  Json out = envelope("helstrom", config);
  out.update(brauer::experiment_result_to_json(result));
  return out;
}

// Exit code 1 when any criterion fails.
Json run_verify_all(const RunConfig& config, bool& failed) {
  brauer::verify::Options options;
  options.seed = config.seed;
  options.workers = effective_workers(config);
  const auto results = brauer::verify::run_all(options);
  Json criteria = Json::array();
  for (const auto& result : results) {
    std::cerr << (result.passed ? "[PASS] " : "[FAIL] ") << result.id << " " << result.name
              << ": " << result.details << "\n";
    criteria.push_back(Json{{"id", result.id},
                            {"name", result.name},
                            {"passed", result.passed},
                            {"details", result.details},
                            {"elapsed_seconds", result.elapsed_seconds}});
  }
  failed = !brauer::verify::all_passed(results);
  Json out = envelope("verify-all", config);
  out["workers"] = options.workers;
  out["criteria"] = std::move(criteria);
  out["passed"] = !failed;
  return out;
}

void flatten_json(const Json& node, const std::string& prefix, std::ostream& os) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items())
      flatten_json(value, prefix.empty() ? key : prefix + "." + key, os);
  } else if (node.is_array()) {
    std::size_t index = 0;
    for (const auto& value : node) flatten_json(value, prefix + "[" + std::to_string(index++) + "]", os);
  } else {
    os << prefix << "," << node.dump() << "\n";
  }
}

void emit(const Json& doc, const RunConfig& config) {
  std::ostringstream body;
  if (config.format == "csv") {
    body << "key,value\n";
    flatten_json(doc, "", body);
  } else {
    body << doc.dump(2) << "\n";
  }
  if (config.output.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream file(config.output, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file " + config.output);
    file << body.str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moment operators of Haar-random real and complex states via the "
               "Brauer diagram algebra"};
  app.require_subcommand(1);

  RunConfig config;
  std::string command;
  bool verify_failed = false;

  auto add_common = [&](CLI::App* sub, bool tensor, bool sampling) {
    sub->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--output", config.output, "Write the report to this path instead of stdout");
    sub->add_option("--seed", config.seed, "64-bit RNG seed")
        ->envname("BRAUER_SEED")
        ->capture_default_str();
    if (tensor)
      sub->add_option("--cap", config.cap, "Maximum dense tensor dimension d^t")
          ->envname("BRAUER_CAP")
          ->capture_default_str();
    if (sampling) {
      sub->add_option("--n-samples", config.n_samples, "Number of samples / trials")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
      sub->add_option("--workers", config.workers,
                      "Worker threads (0 = available parallelism)")
          ->capture_default_str();
    }
    sub->callback([&, sub] { command = sub->get_name(); });
  };
  auto add_td = [&](CLI::App* sub, int default_t) {
    config.t = default_t;
    sub->add_option("--t", config.t, "Tensor power t")->check(CLI::PositiveNumber);
    sub->add_option("--d", config.d, "Local dimension d")->check(CLI::PositiveNumber);
  };

  CLI::App* gram = app.add_subcommand("gram", "Exact Gram matrix of the diagram basis");
  add_td(gram, 2);
  add_common(gram, false, false);

  CLI::App* weingarten = app.add_subcommand("weingarten", "Pseudo-inverse of the Gram matrix");
  add_td(weingarten, 2);
  add_common(weingarten, false, false);

  CLI::App* td = app.add_subcommand(
      "trace-distance", "Numeric and closed-form trace distance between the real and "
                        "complex moment operators");
  add_td(td, 2);
  add_common(td, true, false);

  CLI::App* design = app.add_subcommand(
      "design-check", "Distance of the constructed design-state orbit moment from the "
                      "Haar moment");
  add_td(design, 3);
  add_common(design, true, false);

  CLI::App* constraints =
      app.add_subcommand("constraints", "Exact design constraints on the conjugate overlap");
  add_td(constraints, 2);
  add_common(constraints, false, false);

  CLI::App* impossibility = app.add_subcommand(
      "impossibility", "Constraint contradiction ruling out exact designs for t >= 4");
  add_td(impossibility, 4);
  add_common(impossibility, false, false);

  CLI::App* sample = app.add_subcommand("sample-moment", "Monte Carlo moment estimate");
  add_td(sample, 2);
  sample->add_option("--kind", config.kind, "Ensemble: orthogonal-orbit or unitary-haar")
      ->check(CLI::IsMember({"orthogonal-orbit", "unitary-haar"}))
      ->capture_default_str();
  add_common(sample, true, true);

  CLI::App* helstrom = app.add_subcommand(
      "helstrom", "Optimal two-outcome discrimination experiment (real vs complex)");
  add_td(helstrom, 2);
  add_common(helstrom, true, true);

  CLI::App* verify = app.add_subcommand("verify-all", "Run the full verification grid");
  add_common(verify, true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    Json doc;
    if (command == "gram") doc = run_gram(config);
    else if (command == "weingarten") doc = run_weingarten(config);
    else if (command == "trace-distance") doc = run_trace_distance(config);
    else if (command == "design-check") doc = run_design_check(config);
    else if (command == "constraints") doc = run_constraints(config);
    else if (command == "impossibility") doc = run_impossibility(config);
    else if (command == "sample-moment") doc = run_sample_moment(config);
    else if (command == "helstrom") doc = run_helstrom(config);
    else if (command == "verify-all") doc = run_verify_all(config, verify_failed);
    emit(doc, config);
  } catch (const brauer::CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const brauer::SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return verify_failed ? 1 : 0;
}
