#include "plotdata.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <tuple>

#include "rwnet/error.hpp"

namespace rwnet::cli {

Figure parse_figure(const std::string& text) {
  if (text == "1") return Figure::clustering_vs_p1;
  if (text == "2") return Figure::path_length_vs_m;
  if (text == "3") return Figure::path_length_vs_ln_n;
  throw InputError("figure must be 1, 2 or 3, got '" + text + "'");
}

Series build_series(const CsvTable& sweep, Figure figure) {
  const std::size_t c_p1 = sweep.column("p1");
  const std::size_t c_m = sweep.column("m");
  const std::size_t c_n = sweep.column("N");
  const std::size_t c_special = sweep.column("special_edges");
  const std::size_t c_status = sweep.column("status");

  Series s;
  std::size_t c_y = 0;
  switch (figure) {
    case Figure::clustering_vs_p1:
      s = {"p1", "avg_local_clustering", {}};
      break;
    case Figure::path_length_vs_m:
      s = {"m", "avg_shortest_path", {}};
      break;
    case Figure::path_length_vs_ln_n:
      s = {"ln_N", "avg_shortest_path", {}};
      break;
  }
  c_y = sweep.column(s.y_name);

  using Key = std::tuple<double, double, double, std::string>;
  std::map<Key, SeriesPoint> cells;
  for (const auto& row : sweep.rows) {
    if (row[c_status] != "ok") continue;
    const double p1 = std::stod(row[c_p1]);
    const double m = std::stod(row[c_m]);
    const double n = std::stod(row[c_n]);
    auto& point = cells[Key{p1, m, n, row[c_special]}];
    switch (figure) {
      case Figure::clustering_vs_p1:
        point.x = p1;
        break;
      case Figure::path_length_vs_m:
        point.x = m;
        break;
      case Figure::path_length_vs_ln_n:
        point.x = std::log(n);
        break;
    }
    point.y += std::stod(row[c_y]);
    ++point.runs;
  }
  for (auto& [key, point] : cells) {
    point.y /= static_cast<double>(point.runs);
    s.points.push_back(point);
  }
  std::stable_sort(s.points.begin(), s.points.end(),
                   [](const SeriesPoint& a, const SeriesPoint& b) { return a.x < b.x; });
  return s;
}

void write_series(std::ostream& out, const Series& s) {
  out << s.x_name << ',' << s.y_name << '\n';
  for (const auto& p : s.points) {
    out << format_real(p.x) << ',' << format_real(p.y) << '\n';
  }
}

}  // namespace rwnet::cli
