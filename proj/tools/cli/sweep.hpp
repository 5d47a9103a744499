#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "run_record.hpp"

namespace rwnet::cli {

/// Parameter grid read from a `key = value` file. Grid keys (p1, m, N,
/// special_edges) take comma-separated lists; the run set is their
/// Cartesian product, repeated seeds_per_cell times.
struct SweepSpec {
  std::string name;
  InitialGraphSpec initial = InitialGraphSpec::cycle(10);
  std::vector<double> p1;
  std::vector<std::size_t> m;
  std::vector<std::size_t> n;
  std::vector<bool> special_edges{true};
  double beta = kDefaultDistanceExponent;
  std::uint64_t base_seed = 1;
  std::size_t seeds_per_cell = 3;
  AsplPolicy aspl;

  static SweepSpec parse(std::istream& in);
  static SweepSpec load(const std::filesystem::path& path);

  std::size_t cell_count() const { return p1.size() * m.size() * n.size() * special_edges.size(); }
};

struct SweepRun {
  std::size_t cell = 0;
  std::size_t rep = 0;
  GenParams params;
};

/// Seed of one run, a hash of the grid indices and repetition so adding grid
/// points leaves existing runs' seeds unchanged.
RngSeed cell_seed(std::uint64_t base_seed, std::size_t p1_index, std::size_t m_index,
                  std::size_t n_index, std::size_t special_index, std::size_t rep);

/// Every run of the grid. `scale` divides N (minimum 1).
std::vector<SweepRun> expand_sweep(const SweepSpec& spec, std::size_t scale = 1);

struct SweepOptions {
  std::size_t scale = 1;
  unsigned jobs = 1;
  std::ostream* progress = nullptr;
};

/// Runs every cell; `on_record` is called from one thread at a time, in
/// completion order. Failed runs are reported through their status.
void run_sweep(const SweepSpec& spec, const SweepOptions& options,
               const std::function<void(const RunRecord&)>& on_record);

}  // namespace rwnet::cli
