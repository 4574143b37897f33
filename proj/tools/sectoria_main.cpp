// sectoria command-line front end: randomized inequality certification
// sweeps, single-matrix sector analysis, mean computation, and
// numerical-range boundary export.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sectoria/sectoria.hpp"

namespace {

struct VerifyArgs {
  int n = 4;
  int trials = 100;
  std::vector<double> alphas = {0.2, 0.6, 1.0};
  std::vector<double> weights = {0.1, 0.25, 0.5, 0.75, 0.9};
  std::vector<std::string> maps = {"identity", "pinching", "compression", "normalized_trace"};
  std::vector<std::string> results = {"all"};
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
  double tol = 1e-9;
};

int write_or_print(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open output file: " << out_path << "\n";
    return 2;
  }
  out << payload;
  return 0;
}

int do_verify(const VerifyArgs& args) {
  sectoria::SweepConfig config;
  config.n = args.n;
  config.trials = args.trials;
  config.alphas = args.alphas;
  config.weights = args.weights;
  config.seed = args.seed;
  config.check_options.loewner_tol = args.tol;
  try {
    config.maps.clear();
    for (const std::string& name : args.maps) config.maps.push_back(sectoria::parse_map_kind(name));
    config.targets.clear();
    bool all = false;
    for (const std::string& name : args.results) {
      if (name == "all") {
        all = true;
        break;
      }
      config.targets.push_back(sectoria::parse_check_target(name));
    }
    if (all) config.targets.clear();
    config.validate();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  sectoria::SweepReport report;
  try {
    report = sectoria::run_sweep(config, sectoria::resolve_thread_count());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string payload = (args.format == "csv") ? sectoria::report_to_csv(report)
                                                     : sectoria::report_to_json(report);
  const int io_rc = write_or_print(args.out, payload);
  if (io_rc != 0) return io_rc;

  for (const auto& [name, agg] : report.aggregates) {
    std::cerr << name << ": " << agg.pass_count << "/" << agg.count
              << " passed, min margin " << agg.min_margin << "\n";
  }
  std::cerr << (report.all_passed() ? "all certificates passed"
                                    : "FAILED certificates: " + std::to_string(report.total_failures))
            << "\n";
  return report.all_passed() ? 0 : 1;
}

struct MeanArgs {
  std::string kind = "geom";
  double v = 0.5;
  std::string a_path, b_path;
  double rtol = 1e-10;
  std::string out;
};

int do_mean(const MeanArgs& args) {
  sectoria::Matrix a, b;
  try {
    a = sectoria::read_matrix_file(args.a_path);
    b = sectoria::read_matrix_file(args.b_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  sectoria::Matrix value;
  std::string method = "closed_form";
  int nodes_used = 0;
  double convergence_estimate = 0.0;
  bool converged = true;
  try {
    if (args.kind == "arith") {
      value = sectoria::arithmetic_mean(a, b, args.v);
    } else if (args.kind == "harm") {
      value = sectoria::harmonic_mean(a, b, args.v);
    } else {
      sectoria::MeanResult result = sectoria::geometric_mean_accretive(a, b, args.v, args.rtol);
      value = result.value;
      method = result.method_name();
      nodes_used = result.nodes_used;
      convergence_estimate = result.convergence_estimate;
      converged = result.converged;
    }
  } catch (const sectoria::NotAccretiveError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  nlohmann::json j = sectoria::matrix_to_json(value);
  j["method"] = method;
  j["nodes_used"] = nodes_used;
  j["convergence_estimate"] = convergence_estimate;
  j["converged"] = converged;
  return write_or_print(args.out, j.dump(2) + "\n");
}

int do_angle(const std::string& a_path) {
  sectoria::Matrix a;
  try {
    a = sectoria::read_matrix_file(a_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    const double alpha = sectoria::sector_angle(a);
    std::printf("%.12g\n", alpha);
    return 0;
  } catch (const sectoria::NotAccretiveError&) {
    std::printf("not accretive\n");
    return 1;
  }
}

struct RangeArgs {
  std::string a_path;
  int points = 256;
  std::string out;
};

int do_range(const RangeArgs& args) {
  sectoria::Matrix a;
  try {
    a = sectoria::read_matrix_file(args.a_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::vector<sectoria::Complex> pts;
  try {
    pts = sectoria::numerical_range_boundary(a, args.points);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::string csv = "theta,re,im\n";
  char buf[128];
  for (size_t k = 0; k < pts.size(); ++k) {
    const double theta = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(pts.size());
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", theta, pts[k].real(), pts[k].imag());
    csv += buf;
  }
  return write_or_print(args.out, csv);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted matrix means and sector-matrix inequality certification"};
  app.require_subcommand(1);

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run randomized certification sweeps");
  verify->add_option("--n", verify_args.n, "matrix dimension");
  verify->add_option("--trials", verify_args.trials, "trials per configuration");
  verify->add_option("--alpha", verify_args.alphas, "sector angles in radians")->delimiter(',');
  verify->add_option("--v", verify_args.weights, "mean weights in [0,1]")->delimiter(',');
  verify->add_option("--maps", verify_args.maps, "positive unital map kinds")->delimiter(',');
  verify->add_option("--results", verify_args.results, "result ids or 'all'")->delimiter(',');
  verify->add_option("--seed", verify_args.seed, "master seed");
  verify->add_option("--out", verify_args.out, "report output path (stdout when absent)");
  verify->add_option("--format", verify_args.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--tol", verify_args.tol, "Loewner margin tolerance");

  MeanArgs mean_args;
  CLI::App* mean = app.add_subcommand("mean", "compute a weighted matrix mean");
  mean->add_option("--kind", mean_args.kind, "mean kind")
      ->check(CLI::IsMember({"arith", "harm", "geom"}));
  mean->add_option("--v", mean_args.v, "weight in [0,1]")->check(CLI::Range(0.0, 1.0));
  mean->add_option("--a", mean_args.a_path, "left input matrix file")->required();
  mean->add_option("--b", mean_args.b_path, "right input matrix file")->required();
  mean->add_option("--rtol", mean_args.rtol, "quadrature convergence target");
  mean->add_option("--out", mean_args.out, "output path (stdout when absent)");

  std::string angle_path;
  CLI::App* angle = app.add_subcommand("angle", "print the minimal sector angle");
  angle->add_option("--a", angle_path, "input matrix file")->required();

  RangeArgs range_args;
  CLI::App* range = app.add_subcommand("range", "export numerical-range boundary samples");
  range->add_option("--a", range_args.a_path, "input matrix file")->required();
  range->add_option("--points", range_args.points, "number of boundary directions");
  range->add_option("--out", range_args.out, "output path (stdout when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // help exits 0, any parse problem exits 2
  }

  if (verify->parsed()) return do_verify(verify_args);
  if (mean->parsed()) return do_mean(mean_args);
  if (angle->parsed()) return do_angle(angle_path);
  if (range->parsed()) {
    if (range_args.points < 3) {
      std::cerr << "error: --points must be at least 3\n";
      return 2;
    }
    return do_range(range_args);
  }
  return 2;
}
