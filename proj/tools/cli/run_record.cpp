#include "run_record.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <istream>
#include <ostream>
#include <sstream>

#include "rwnet/error.hpp"

namespace rwnet::cli {
namespace {

std::string sanitize(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return s;
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

AsplPolicy AsplPolicy::parse(std::string_view text) {
  if (text == "auto") return {};
  return {false, AsplMode::parse(text)};
}

std::string AsplPolicy::to_string() const { return automatic ? "auto" : fixed.to_string(); }

AsplMode AsplPolicy::resolve(std::size_t node_count, RngSeed seed) const {
  if (automatic) return default_aspl_mode(node_count, seed);
  AsplMode mode = fixed;
  mode.seed = seed;
  return mode;
}

const std::vector<std::string>& run_record_columns() {
  static const std::vector<std::string> cols = {
      "timestamp",      "initial",   "N",
      "m",              "p1",        "special_edges",
      "beta",           "seed",      "scale",
      "rep",            "n_nodes",   "n_edges",
      "avg_local_clustering", "transitivity", "avg_shortest_path",
      "gamma",          "max_degree", "aspl_mode",
      "wall_time_s",    "status"};
  return cols;
}

const std::vector<std::string>& metrics_columns() {
  static const std::vector<std::string> cols = {
      "n_nodes", "n_edges", "avg_local_clustering", "transitivity",
      "avg_shortest_path", "gamma", "max_degree", "aspl_mode"};
  return cols;
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string iso8601_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

static void write_joined(std::ostream& out, const std::vector<std::string>& cols) {
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
}

void write_run_record_header(std::ostream& out) { write_joined(out, run_record_columns()); }

void write_metrics_header(std::ostream& out) { write_joined(out, metrics_columns()); }

void write_run_record(std::ostream& out, const RunRecord& r) {
  const auto& p = r.params;
  const auto& m = r.metrics;
  out << r.timestamp << ',' << sanitize(p.initial.to_string()) << ',' << p.nodes_to_add << ','
      << p.marks_per_step << ',' << format_real(p.p1) << ',' << (p.special_edges ? 1 : 0) << ','
      << format_real(p.beta) << ',' << p.seed.value << ',' << r.scale << ',' << r.rep << ','
      << m.node_count << ',' << m.edge_count << ',' << format_real(m.avg_local_clustering) << ','
      << format_real(m.transitivity) << ',' << format_real(m.avg_shortest_path) << ','
      << format_real(m.gamma) << ',' << m.max_degree << ',' << m.aspl_mode.to_string() << ','
      << format_real(r.wall_time_s) << ',' << sanitize(r.status) << '\n';
}

void write_metrics_row(std::ostream& out, const NetworkMetrics& m) {
  out << m.node_count << ',' << m.edge_count << ',' << format_real(m.avg_local_clustering) << ','
      << format_real(m.transitivity) << ',' << format_real(m.avg_shortest_path) << ','
      << format_real(m.gamma) << ',' << m.max_degree << ',' << m.aspl_mode.to_string() << '\n';
}

RngSeed aspl_seed_for(RngSeed run_seed) { return {mix_seed(run_seed.value, 0xa5a5)}; }

RunRecord execute_run(const GenParams& params, const AsplPolicy& aspl, std::size_t scale,
                      std::size_t rep, unsigned threads) {
  RunRecord r;
  r.params = params;
  r.scale = scale;
  r.rep = rep;
  r.timestamp = iso8601_now();
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Graph g = generate(params);
    r.metrics = measure(g, aspl.resolve(g.node_count(), aspl_seed_for(params.seed)), threads);
  } catch (const std::exception& e) {
    r.status = std::string("error: ") + e.what();
  }
  r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw InputError("missing column '" + std::string(name) + "'");
}

CsvTable read_csv(std::istream& in) {
  CsvTable t;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split_commas(line);
    if (!have_header) {
      t.header = std::move(cells);
      have_header = true;
    } else {
      cells.resize(t.header.size());
      t.rows.push_back(std::move(cells));
    }
  }
  if (!have_header) throw InputError("CSV input is empty");
  return t;
}

}  // namespace rwnet::cli
