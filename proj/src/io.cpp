#include "betadepth/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

namespace betadepth {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

bool parse_double(std::string_view field, double& out) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  if (field.empty()) return false;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size();
}

nlohmann::ordered_json number_json(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

nlohmann::ordered_json range_json(const RangeStat& r) {
  return {{"min", number_json(r.min)}, {"max", number_json(r.max)}};
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

Dataset read_points_csv(std::istream& in, std::string_view source) {
  const std::string src(source);
  std::vector<double> coords;
  std::size_t dim = 0;
  bool seen_first = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split(line);
    std::vector<double> row(fields.size());
    std::size_t bad = fields.size();
    for (std::size_t k = 0; k < fields.size(); ++k) {
      if (!parse_double(fields[k], row[k])) {
        bad = k;
        break;
      }
    }
    if (!seen_first) {
      seen_first = true;
      if (bad != fields.size()) continue;  // header row
    }
    if (bad != fields.size()) {
      throw ParseError(src, line_no,
                       "invalid number '" + std::string(fields[bad]) + "' in column " +
                           std::to_string(bad + 1));
    }
    if (dim == 0) dim = row.size();
    if (row.size() != dim) {
      throw ParseError(src, line_no,
                       "expected " + std::to_string(dim) + " coordinates, found " +
                           std::to_string(row.size()));
    }
    for (double v : row) {
      if (!std::isfinite(v)) throw ParseError(src, line_no, "non-finite coordinate");
    }
    coords.insert(coords.end(), row.begin(), row.end());
  }
  if (dim == 0) throw ParseError(src, line_no, "no points found");
  return Dataset(dim, std::move(coords));
}

Dataset read_points_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_points_csv(in, path.string());
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

void write_results_csv(std::ostream& out, std::span<const DepthResult> results) {
  out << "query_index,n,beta,method,raw_count,normalized\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    out << i << ',' << r.n << ',' << (r.beta ? format_number(*r.beta) : "simplicial") << ','
        << to_string(r.method) << ',' << r.raw_count << ',' << format_number(r.normalized) << '\n';
  }
}

nlohmann::ordered_json results_json(std::span<const DepthResult> results, std::size_t n, double beta,
                            Method method) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    rows.push_back({{"query_index", i},
                    {"raw_count", results[i].raw_count},
                    {"normalized", results[i].normalized}});
  }
  return {{"n", n}, {"beta", beta}, {"method", std::string(to_string(method))}, {"results", rows}};
}

void write_experiment_csv(std::ostream& out, const ExperimentReport& report) {
  out << "query_index,qx,qy,sd_raw,sphd_raw,ld_raw,sd,sphd,ld\n";
  for (const auto& r : report.rows) {
    out << r.query_index << ',' << format_number(r.q.x) << ',' << format_number(r.q.y) << ','
        << r.sd_raw << ',' << r.sphd_raw << ',' << r.ld_raw << ',' << format_number(r.sd) << ','
        << format_number(r.sphd) << ',' << format_number(r.ld) << '\n';
  }
  const auto& s = report.summary;
  const auto stat = [&](const char* name, const RangeStat& r) {
    out << name << ',' << format_number(r.min) << ',' << format_number(r.max) << '\n';
  };
  out << "\nstatistic,min,max\n";
  stat("SD", s.sd);
  stat("SphD", s.sphd);
  stat("LD", s.ld);
  stat("SphD/SD", s.sphd_over_sd);
  stat("LD/SD", s.ld_over_sd);
  stat("LD/SphD", s.ld_over_sphd);
  out << "\nbound,holds\n";
  out << "LD>=SphD," << (s.lens_dominates_spherical ? "true" : "false") << '\n';
  out << "SphD>=2/3*SD," << (s.spherical_two_thirds_simplicial ? "true" : "false") << '\n';
}

nlohmann::ordered_json experiment_json(const ExperimentReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"query_index", r.query_index},
                    {"q", {r.q.x, r.q.y}},
                    {"sd_raw", r.sd_raw},
                    {"sphd_raw", r.sphd_raw},
                    {"ld_raw", r.ld_raw},
                    {"sd", r.sd},
                    {"sphd", r.sphd},
                    {"ld", r.ld}});
  }
  const auto& s = report.summary;
  const auto& c = report.config;
  return {{"config",
           {{"n_data", c.n_data},
            {"n_query", c.n_query},
            {"seed", c.seed},
            {"half_width", c.half_width}}},
          {"rows", rows},
          {"summary",
           {{"SD", range_json(s.sd)},
            {"SphD", range_json(s.sphd)},
            {"LD", range_json(s.ld)},
            {"SphD/SD", range_json(s.sphd_over_sd)},
            {"LD/SD", range_json(s.ld_over_sd)},
            {"LD/SphD", range_json(s.ld_over_sphd)},
            {"lens_dominates_spherical", s.lens_dominates_spherical},
            {"spherical_two_thirds_simplicial", s.spherical_two_thirds_simplicial}}}};
}

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows) {
  out << "n,engine,beta,median_seconds,raw_count\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.engine << ',' << format_number(r.beta) << ','
        << format_number(r.median_seconds) << ',' << r.raw_count << '\n';
  }
}

}  // namespace betadepth
