#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "rwnet/error.hpp"

namespace rwnet::cli {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream ss(value);
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

template <typename T>
T parse_number(const std::string& text, const std::string& key) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InputError("sweep key '" + key + "': invalid number '" + text + "'");
  }
  return value;
}

bool parse_bool(const std::string& text, const std::string& key) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw InputError("sweep key '" + key + "': expected true/false, got '" + text + "'");
}

template <typename T, typename Parse>
std::vector<T> parse_grid(const std::string& key, const std::string& value, Parse parse) {
  const auto items = split_list(value);
  if (items.empty()) throw InputError("sweep grid '" + key + "' is empty");
  std::vector<T> out;
  for (const auto& it : items) out.push_back(parse(it, key));
  return out;
}

}  // namespace

SweepSpec SweepSpec::parse(std::istream& in) {
  SweepSpec spec;
  bool have_p1 = false;
  bool have_m = false;
  bool have_n = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw InputError("sweep line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(text).substr(0, eq));
    const std::string value = trim(std::string_view(text).substr(eq + 1));

    if (key == "name") {
      spec.name = value;
    } else if (key == "initial") {
      spec.initial = InitialGraphSpec::parse(value);
    } else if (key == "p1") {
      spec.p1 = parse_grid<double>(key, value, parse_number<double>);
      have_p1 = true;
    } else if (key == "m") {
      spec.m = parse_grid<std::size_t>(key, value, parse_number<std::size_t>);
      have_m = true;
    } else if (key == "N") {
      spec.n = parse_grid<std::size_t>(key, value, parse_number<std::size_t>);
      have_n = true;
    } else if (key == "special_edges") {
      const auto flags = parse_grid<int>(key, value, [](const std::string& t, const std::string& k) {
        return parse_bool(t, k) ? 1 : 0;
      });
      spec.special_edges.assign(flags.begin(), flags.end());
    } else if (key == "beta") {
      spec.beta = parse_number<double>(value, key);
    } else if (key == "seed" || key == "base_seed") {
      spec.base_seed = parse_number<std::uint64_t>(value, key);
    } else if (key == "seeds_per_cell") {
      spec.seeds_per_cell = parse_number<std::size_t>(value, key);
      if (spec.seeds_per_cell == 0) throw InputError("seeds_per_cell must be at least 1");
    } else if (key == "aspl") {
      spec.aspl = AsplPolicy::parse(value);
    } else {
      throw InputError("sweep line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (!have_p1) throw InputError("sweep grid 'p1' is empty");
  if (!have_m) throw InputError("sweep grid 'm' is empty");
  if (!have_n) throw InputError("sweep grid 'N' is empty");

  // Surface bad grid values before anything runs.
  for (const auto& run : expand_sweep(spec)) run.params.validate();
  return spec;
}

SweepSpec SweepSpec::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open sweep spec '" + path.string() + "'");
  return parse(in);
}

RngSeed cell_seed(std::uint64_t base_seed, std::size_t p1_index, std::size_t m_index,
                  std::size_t n_index, std::size_t special_index, std::size_t rep) {
  std::uint64_t h = mix_seed(base_seed, p1_index);
  h = mix_seed(h, m_index);
  h = mix_seed(h, n_index);
  h = mix_seed(h, special_index);
  h = mix_seed(h, rep);
  return {h};
}

std::vector<SweepRun> expand_sweep(const SweepSpec& spec, std::size_t scale) {
  if (scale == 0) throw InputError("scale must be at least 1");
  std::vector<SweepRun> runs;
  runs.reserve(spec.cell_count() * spec.seeds_per_cell);
  std::size_t cell = 0;
  for (std::size_t in = 0; in < spec.n.size(); ++in) {
    for (std::size_t im = 0; im < spec.m.size(); ++im) {
      for (std::size_t ip = 0; ip < spec.p1.size(); ++ip) {
        for (std::size_t is = 0; is < spec.special_edges.size(); ++is, ++cell) {
          for (std::size_t rep = 0; rep < spec.seeds_per_cell; ++rep) {
            GenParams p;
            p.initial = spec.initial;
            p.nodes_to_add = std::max<std::size_t>(1, spec.n[in] / scale);
            p.marks_per_step = spec.m[im];
            p.p1 = spec.p1[ip];
            p.special_edges = spec.special_edges[is];
            p.beta = spec.beta;
            p.seed = cell_seed(spec.base_seed, ip, im, in, is, rep);
            runs.push_back({cell, rep, p});
          }
        }
      }
    }
  }
  return runs;
}

void run_sweep(const SweepSpec& spec, const SweepOptions& options,
               const std::function<void(const RunRecord&)>& on_record) {
  const auto runs = expand_sweep(spec, options.scale);
  const unsigned jobs = std::clamp<unsigned>(options.jobs, 1, std::max<std::size_t>(1, runs.size()));
  // Parallelism goes to whole runs; each run measures single-threaded.
  const unsigned metric_threads = jobs > 1 ? 1 : 0;

  std::atomic<std::size_t> next{0};
  std::mutex writer;
  std::size_t done = 0;

  auto worker = [&] {
    for (std::size_t i = next++; i < runs.size(); i = next++) {
      const auto& run = runs[i];
      RunRecord record = execute_run(run.params, spec.aspl, options.scale, run.rep, metric_threads);
      std::lock_guard lock(writer);
      ++done;
      on_record(record);
      if (options.progress != nullptr) {
        *options.progress << '[' << done << '/' << runs.size() << "] N=" << run.params.nodes_to_add
                          << " m=" << run.params.marks_per_step
                          << " p1=" << format_real(run.params.p1)
                          << " special_edges=" << (run.params.special_edges ? 1 : 0)
                          << " rep=" << run.rep << ' ' << record.status << ' '
                          << format_real(record.wall_time_s) << "s\n";
        options.progress->flush();
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
}

}  // namespace rwnet::cli
