#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "run_record.hpp"

namespace rwnet::cli {

enum class Figure {
  clustering_vs_p1 = 1,   // (p1, avg_local_clustering)
  path_length_vs_m = 2,   // (m, avg_shortest_path)
  path_length_vs_ln_n = 3 // (ln N, avg_shortest_path)
};

Figure parse_figure(const std::string& text);

struct SeriesPoint {
  double x = 0.0;
  double y = 0.0;
  std::size_t runs = 0;
};

struct Series {
  std::string x_name;
  std::string y_name;
  std::vector<SeriesPoint> points;  // sorted by x
};

/// Averages successful sweep rows per grid cell (p1, m, N, special_edges)
/// and projects each cell onto the figure's axes. Throws InputError naming
/// any missing column.
Series build_series(const CsvTable& sweep, Figure figure);

void write_series(std::ostream& out, const Series& s);

}  // namespace rwnet::cli
