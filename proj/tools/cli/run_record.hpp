#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rwnet/generator.hpp"
#include "rwnet/metrics.hpp"

namespace rwnet::cli {

/// Picks the ASPL mode for a run: `auto` follows default_aspl_mode(),
/// otherwise the fixed mode is used with a per-run seed.
struct AsplPolicy {
  bool automatic = true;
  AsplMode fixed;

  static AsplPolicy parse(std::string_view text);
  std::string to_string() const;
  AsplMode resolve(std::size_t node_count, RngSeed seed) const;
};

/// One generate + measure run, one CSV row.
struct RunRecord {
  GenParams params;
  std::size_t scale = 1;
  std::size_t rep = 0;
  NetworkMetrics metrics;
  double wall_time_s = 0.0;
  std::string timestamp;
  std::string status = "ok";

  bool ok() const { return status == "ok"; }
};

/// Column order of sweep CSV files.
const std::vector<std::string>& run_record_columns();
/// Column order of `measure` output.
const std::vector<std::string>& metrics_columns();

/// Six significant digits, '.' decimal separator, "nan" for NaN.
std::string format_real(double x);
std::string iso8601_now();

void write_run_record_header(std::ostream& out);
void write_run_record(std::ostream& out, const RunRecord& r);
void write_metrics_header(std::ostream& out);
void write_metrics_row(std::ostream& out, const NetworkMetrics& m);

/// Seed for the sampled-ASPL source draw of a run.
RngSeed aspl_seed_for(RngSeed run_seed);

/// Generates and measures, capturing any failure in `status`.
RunRecord execute_run(const GenParams& params, const AsplPolicy& aspl, std::size_t scale = 1,
                      std::size_t rep = 0, unsigned threads = 0);

/// A CSV file as header names plus string rows; no quoting support.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of `name`, or throws InputError naming the missing column.
  std::size_t column(std::string_view name) const;
};

CsvTable read_csv(std::istream& in);

}  // namespace rwnet::cli
