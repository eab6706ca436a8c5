// betadepth: beta-skeleton depth from the command line.
//
//   betadepth compute --beta 2 --data data.csv --query q.csv --format json
//   betadepth experiment --n-data 750 --n-query 100 --seed 1
//   betadepth gadget --kind lens --values 1,2,2
//   betadepth bench --max-n 100000

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "betadepth/bench.hpp"
#include "betadepth/compute.hpp"
#include "betadepth/experiment.hpp"
#include "betadepth/gadgets.hpp"
#include "betadepth/io.hpp"

namespace bd = betadepth;

namespace {

struct ComputeArgs {
  double beta = 1.0;
  std::string engine = "auto";
  std::string data;
  std::string query;
  std::string format = "csv";
  std::optional<bool> audit;
};

struct ExperimentArgs {
  bd::ExperimentConfig config;
  std::string format = "csv";
};

struct GadgetArgs {
  std::string kind = "spherical";
  double beta = 2.0;
  std::vector<double> values;
  std::string format = "json";
};

int run_compute(const ComputeArgs& args) {
  const bd::Dataset data = bd::read_points_csv_file(args.data);
  const bd::Dataset queries = bd::read_points_csv_file(args.query);
  bd::ComputeConfig config;
  config.beta = args.beta;
  config.engine = bd::parse_engine(args.engine);
  config.audit = args.audit;
  const auto format = bd::parse_output_format(args.format);
  const auto outcome = bd::compute_depths(data, queries, config);
  if (format == bd::OutputFormat::json) {
    std::cout << bd::results_json(outcome.results, data.size(), args.beta, outcome.method).dump(2)
              << '\n';
  } else {
    bd::write_results_csv(std::cout, outcome.results);
  }
  if (outcome.audited > 0) {
    std::cerr << "audit: " << outcome.audited << " queries matched brute force\n";
  }
  return 0;
}

int run_experiment(const ExperimentArgs& args) {
  const auto format = bd::parse_output_format(args.format);
  const auto report = bd::run_experiment(args.config);
  if (format == bd::OutputFormat::json) {
    std::cout << bd::experiment_json(report).dump(2) << '\n';
  } else {
    bd::write_experiment_csv(std::cout, report);
  }
  const auto& s = report.summary;
  return (s.lens_dominates_spherical && s.spherical_two_thirds_simplicial) ? 0 : 3;
}

int run_gadget(const GadgetArgs& args) {
  const auto format = bd::parse_output_format(args.format);
  nlohmann::ordered_json out;
  out["kind"] = args.kind;
  out["n"] = args.values.size();
  if (args.kind == "spherical") {
    const auto d = bd::decide_uniqueness_spherical(args.values);
    out["raw_count"] = d.raw_count;
    out["unique_count"] = d.unique_count;
    out["unique"] = d.unique;
  } else if (args.kind == "lens" || args.kind == "beta") {
    const double beta = args.kind == "lens" ? 2.0 : args.beta;
    const auto d = bd::decide_uniqueness_beta(args.values, beta);
    out["beta"] = beta;
    out["theta"] = bd::gadget_angle(beta);
    out["raw_count"] = d.raw_count;
    out["unique_count"] = args.values.size();
    out["unique"] = d.unique;
    out["duplicate_pairs"] = d.duplicate_pairs;
  } else {
    throw std::invalid_argument("unknown gadget kind '" + args.kind + "'");
  }
  if (format == bd::OutputFormat::json) {
    std::cout << out.dump(2) << '\n';
  } else {
    bool first = true;
    for (const auto& [key, value] : out.items()) {
      std::cout << (first ? "" : ",") << key;
      first = false;
    }
    std::cout << '\n';
    first = true;
    for (const auto& [key, value] : out.items()) {
      std::cout << (first ? "" : ",") << (value.is_string() ? value.get<std::string>() : value.dump());
      first = false;
    }
    std::cout << '\n';
  }
  return 0;
}

int run_bench_command(const bd::BenchConfig& config) {
  const auto rows = bd::run_bench(config);
  bd::write_bench_csv(std::cout, rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"beta-skeleton depth (spherical, lens, general beta >= 1) of query points"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* compute_cmd = app.add_subcommand("compute", "depth of each query point against a data set");
  compute_cmd->add_option("--beta", compute.beta, "skeleton parameter, >= 1")->default_val(1.0);
  compute_cmd->add_option("--engine", compute.engine, "auto | brute | fast")
      ->check(CLI::IsMember({"auto", "brute", "fast"}));
  compute_cmd->add_option("--data", compute.data, "data points CSV")->required();
  compute_cmd->add_option("--query", compute.query, "query points CSV")->required();
  compute_cmd->add_option("--format", compute.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  compute_cmd->add_flag("--audit,!--no-audit", compute.audit,
                        "cross-check fast engines against brute force on sampled queries "
                        "(default: on for n <= 500)");

  ExperimentArgs experiment;
  auto* experiment_cmd =
      app.add_subcommand("experiment", "simplicial / spherical / lens depth on random points");
  experiment_cmd->add_option("--n-data", experiment.config.n_data, "data points")->default_val(750);
  experiment_cmd->add_option("--n-query", experiment.config.n_query, "query points")->default_val(100);
  experiment_cmd->add_option("--seed", experiment.config.seed, "RNG seed")->default_val(1);
  experiment_cmd->add_option("--half-width", experiment.config.half_width,
                             "points are uniform in [-w, w]^2")
      ->default_val(10.0);
  experiment_cmd->add_option("--format", experiment.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  GadgetArgs gadget;
  auto* gadget_cmd = app.add_subcommand("gadget", "element-uniqueness gadget depth at the origin");
  gadget_cmd->add_option("--kind", gadget.kind, "spherical | lens | beta")
      ->check(CLI::IsMember({"spherical", "lens", "beta"}));
  gadget_cmd->add_option("--beta", gadget.beta, "beta for --kind beta (> 1)")->default_val(2.0);
  gadget_cmd->add_option("--values", gadget.values, "comma-separated values")
      ->required()
      ->delimiter(',');
  gadget_cmd->add_option("--format", gadget.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  bd::BenchConfig bench;
  auto* bench_cmd = app.add_subcommand("bench", "timing table for the fast and brute engines");
  bench_cmd->add_option("--max-n", bench.max_n, "largest data size")->default_val(100000);
  bench_cmd->add_option("--brute-cap", bench.brute_cap, "largest size run by brute force")
      ->default_val(10000);
  bench_cmd->add_option("--reps", bench.repetitions, "repetitions per timing")->default_val(3);
  bench_cmd->add_option("--seed", bench.seed, "RNG seed")->default_val(7);
  bench_cmd->add_option("--beta", bench.beta, "beta for the beta_fast rows")->default_val(2.0);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute_cmd) return run_compute(compute);
    if (*experiment_cmd) return run_experiment(experiment);
    if (*gadget_cmd) return run_gadget(gadget);
    if (*bench_cmd) return run_bench_command(bench);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
