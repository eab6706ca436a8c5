#pragma once

// Point files: CSV, one point per row, comma-separated coordinates, optional
// header row. The dimension is taken from the first data row.

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "betadepth/bench.hpp"
#include "betadepth/dataset.hpp"
#include "betadepth/experiment.hpp"
#include "betadepth/gadgets.hpp"

namespace betadepth {

/// Parse failure carrying the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Dataset read_points_csv(std::istream& in, std::string_view source = "<input>");
Dataset read_points_csv_file(const std::filesystem::path& path);

/// Shortest round-trip decimal form; "inf"/"-inf"/"nan" for non-finite values.
std::string format_number(double v);

enum class OutputFormat { csv, json };
OutputFormat parse_output_format(std::string_view name);

void write_results_csv(std::ostream& out, std::span<const DepthResult> results);
/// {"n":..., "beta":..., "method":..., "results":[{"query_index", "raw_count", "normalized"}]}
nlohmann::ordered_json results_json(std::span<const DepthResult> results, std::size_t n, double beta,
                            Method method);

void write_experiment_csv(std::ostream& out, const ExperimentReport& report);
nlohmann::ordered_json experiment_json(const ExperimentReport& report);

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows);

}  // namespace betadepth
