#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "plotdata.hpp"
#include "rwnet/edge_list.hpp"
#include "rwnet/error.hpp"
#include "rwnet/generator.hpp"
#include "rwnet/metrics.hpp"
#include "run_record.hpp"
#include "sweep.hpp"

namespace rwnet::cli {
namespace {

constexpr const char* kSchemaHelp =
    "CSV schemas (fixed column order):\n"
    "  measure:  n_nodes,n_edges,avg_local_clustering,transitivity,avg_shortest_path,"
    "gamma,max_degree,aspl_mode\n"
    "  sweep:    timestamp,initial,N,m,p1,special_edges,beta,seed,scale,rep,n_nodes,n_edges,\n"
    "            avg_local_clustering,transitivity,avg_shortest_path,gamma,max_degree,"
    "aspl_mode,wall_time_s,status\n"
    "  plotdata: <x>,<y> with x in {p1, m, ln_N}\n"
    "Exit codes: 0 success, 1 usage, 2 runtime or I/O error.";

struct GenerateArgs {
  std::string initial = "cycle:10";
  std::size_t n = 0;
  std::size_t m = 5;
  double p1 = 0.5;
  double beta = kDefaultDistanceExponent;
  bool no_special_edge = false;
  std::uint64_t seed = 1;
  std::string out;
};

struct MeasureArgs {
  std::string input;
  std::string aspl = "auto";
  std::uint64_t seed = 1;
  bool header = false;
  unsigned jobs = 0;
};

struct SweepArgs {
  std::string spec;
  std::string out;
  std::size_t scale = 1;
  unsigned jobs = 1;
  bool quiet = false;
};

struct PlotArgs {
  std::string input;
  std::string figure = "1";
  std::string out;
};

int usage_error(std::ostream& err, const std::string& msg) {
  err << "error: " << msg << "\nRun with --help for usage.\n";
  return kExitUsage;
}

int runtime_error(std::ostream& err, const std::string& msg) {
  err << "error: " << msg << '\n';
  return kExitRuntime;
}

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  GenParams params;
  try {
    params.initial = InitialGraphSpec::parse(a.initial);
    params.nodes_to_add = a.n;
    params.marks_per_step = a.m;
    params.p1 = a.p1;
    params.beta = a.beta;
    params.special_edges = !a.no_special_edge;
    params.seed = RngSeed{a.seed};
    params.validate();
  } catch (const InputError& e) {
    return usage_error(err, e.what());
  }
  try {
    const auto t0 = std::chrono::steady_clock::now();
    const Graph g = generate(params);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    save_edge_list(a.out, g);
    out << "nodes=" << g.node_count() << " edges=" << g.edge_count()
        << " wall_time_s=" << format_real(secs) << " out=" << a.out << '\n';
  } catch (const std::exception& e) {
    return runtime_error(err, e.what());
  }
  return kExitOk;
}

int cmd_measure(const MeasureArgs& a, std::ostream& out, std::ostream& err) {
  AsplPolicy policy;
  try {
    policy = AsplPolicy::parse(a.aspl);
  } catch (const InputError& e) {
    return usage_error(err, e.what());
  }
  try {
    const Graph g = load_edge_list(a.input);
    const auto metrics = measure(g, policy.resolve(g.node_count(), RngSeed{a.seed}), a.jobs);
    if (a.header) write_metrics_header(out);
    write_metrics_row(out, metrics);
  } catch (const std::exception& e) {
    return runtime_error(err, e.what());
  }
  return kExitOk;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  SweepSpec spec;
  try {
    spec = SweepSpec::load(a.spec);
  } catch (const IoError& e) {
    return runtime_error(err, e.what());
  } catch (const InputError& e) {
    return usage_error(err, e.what());
  }
  if (a.scale == 0) return usage_error(err, "--scale must be at least 1");

  std::ofstream file(a.out);
  if (!file) return runtime_error(err, "cannot open '" + a.out + "' for writing");
  write_run_record_header(file);
  std::size_t failed = 0;
  SweepOptions options{a.scale, std::max(1u, a.jobs), a.quiet ? nullptr : &out};
  try {
    run_sweep(spec, options, [&](const RunRecord& r) {
      write_run_record(file, r);
      file.flush();
      failed += r.ok() ? 0 : 1;
    });
  } catch (const std::exception& e) {
    return runtime_error(err, e.what());
  }
  if (!file) return runtime_error(err, "failed writing '" + a.out + "'");
  out << "wrote " << spec.cell_count() * spec.seeds_per_cell << " rows to " << a.out;
  if (failed > 0) out << " (" << failed << " failed)";
  out << '\n';
  return kExitOk;
}

int cmd_plotdata(const PlotArgs& a, std::ostream& out, std::ostream& err) {
  Figure figure{};
  try {
    figure = parse_figure(a.figure);
  } catch (const InputError& e) {
    return usage_error(err, e.what());
  }
  try {
    std::ifstream in(a.input);
    if (!in) throw IoError("cannot open sweep CSV '" + a.input + "'");
    const auto series = build_series(read_csv(in), figure);
    if (a.out.empty()) {
      write_series(out, series);
    } else {
      std::ofstream file(a.out);
      if (!file) throw IoError("cannot open '" + a.out + "' for writing");
      write_series(file, series);
    }
  } catch (const std::exception& e) {
    return runtime_error(err, e.what());
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random-walk network generator with distance-biased shortcut edges"};
  app.footer(kSchemaHelp);
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Grow a graph and write its edge list");
  generate_cmd->add_option("--initial", gen.initial, "cycle:<n> | complete:<n> | file:<path>")
      ->capture_default_str();
  generate_cmd->add_option("--N", gen.n, "Number of nodes to add")->required();
  generate_cmd->add_option("--m", gen.m, "Marked nodes per iteration")->capture_default_str();
  generate_cmd->add_option("--p1", gen.p1, "Probability of a one-step walk phase")
      ->capture_default_str();
  generate_cmd->add_option("--beta", gen.beta, "Shortcut distance exponent")
      ->capture_default_str();
  generate_cmd->add_flag("--no-special-edge", gen.no_special_edge,
                         "Disable the shortcut edge (baseline process)");
  generate_cmd->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  generate_cmd->add_option("--out", gen.out, "Output edge-list path")->required();

  MeasureArgs meas;
  auto* measure_cmd = app.add_subcommand("measure", "Print the metrics of an edge list as CSV");
  measure_cmd->add_option("input", meas.input, "Edge-list file")->required();
  measure_cmd->add_option("--aspl", meas.aspl, "auto | exact | sampled:<k>")
      ->capture_default_str();
  measure_cmd->add_option("--seed", meas.seed, "Seed for sampled ASPL sources")
      ->capture_default_str();
  measure_cmd->add_flag("--header", meas.header, "Print the CSV header row");
  measure_cmd->add_option("--jobs", meas.jobs, "BFS worker threads (0 = all cores)")
      ->capture_default_str();

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a parameter grid and write one CSV row per run");
  sweep_cmd->add_option("spec", sw.spec, "Sweep spec file (key = value lines)")->required();
  sweep_cmd->add_option("--out", sw.out, "Output CSV path")->required();
  sweep_cmd->add_option("--scale", sw.scale, "Divide every N by this factor")
      ->capture_default_str();
  sweep_cmd->add_option("--jobs", sw.jobs, "Concurrent runs")->capture_default_str();
  sweep_cmd->add_flag("--quiet", sw.quiet, "No progress lines");

  PlotArgs plot;
  auto* plot_cmd = app.add_subcommand("plotdata", "Aggregate a sweep CSV into an (x, y) series");
  plot_cmd->add_option("input", plot.input, "Sweep CSV")->required();
  plot_cmd->add_option("--figure", plot.figure,
                       "1: (p1, C-bar)  2: (m, L-bar)  3: (ln N, L-bar)")
      ->capture_default_str();
  plot_cmd->add_option("--out", plot.out, "Output path (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    return usage_error(err, e.what() + std::string("\n") + sub->help());
  }

  if (generate_cmd->parsed()) return cmd_generate(gen, out, err);
  if (measure_cmd->parsed()) return cmd_measure(meas, out, err);
  if (sweep_cmd->parsed()) return cmd_sweep(sw, out, err);
  if (plot_cmd->parsed()) return cmd_plotdata(plot, out, err);
  return usage_error(err, "no subcommand given");
}

}  // namespace rwnet::cli
