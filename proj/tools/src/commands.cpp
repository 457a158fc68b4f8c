#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "segame/cli.hpp"
#include "segame/cover.hpp"
#include "segame/entropy.hpp"
#include "segame/generators.hpp"
#include "segame/graph.hpp"
#include "segame/metrics.hpp"
#include "segame/overlap.hpp"

namespace segame::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

LoadedGraph load_graph(const std::string& path, bool directed, bool weighted) {
  auto in = open_in(path);
  return parse_edge_list(in, directed, weighted);
}

int parse_args(CLI::App& app, const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  // CLI11 consumes a reversed vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }
  return -1;
}

// Runs the body and maps library exceptions onto the exit-code contract.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

struct GameOptions {
  bool directed = false;
  bool weighted = false;
  bool overlapping = false;
  DetectorConfig config;
  std::string rule = "algorithm1";
  std::uint64_t seed = 0;
};

void add_game_options(CLI::App& app, GameOptions& o) {
  app.add_flag("--directed", o.directed, "Treat edges as directed");
  app.add_flag("--weighted", o.weighted, "Read a third weight column");
  app.add_flag("--overlapping", o.overlapping, "Run the node replication phase");
  app.add_option("--tau-n", o.config.tau_n, "Termination threshold in (0, 1)")
      ->capture_default_str();
  app.add_option("--gamma", o.config.gamma, "Overlap factor (inf allowed)")->capture_default_str();
  app.add_option("--max-iters", o.config.max_iterations, "Sweep limit")->capture_default_str();
  app.add_option("--rule", o.rule, "Baseline of the strategy choice")
      ->check(CLI::IsMember({"algorithm1", "eq7"}))
      ->capture_default_str();
  app.add_option("--seed", o.seed, "Shuffle the sweep order with this seed");
}

void finish_game_options(const CLI::App& app, GameOptions& o) {
  o.config.rule = o.rule == "eq7" ? StrategyRule::stay_baseline : StrategyRule::leave_baseline;
  if (app.count("--seed")) o.config.ordering_seed = o.seed;
  o.config.validate();
}

struct Detection {
  Cover cover;
  RunReport report;
};

Detection run_detection(const Graph& graph, const DetectorConfig& config, bool overlapping) {
  Detection d;
  RunReport& r = d.report;
  r.nodes = graph.node_count();
  r.edges = graph.edge_count();
  r.directed = graph.directed();
  r.overlapping = overlapping;
  r.rule = config.rule;
  r.tau_n = config.tau_n;
  r.gamma = config.gamma;
  r.max_iterations = config.max_iterations;
  r.workers = config.workers;
  r.seed = config.ordering_seed;

  using clock = std::chrono::steady_clock;
  auto start = clock::now();
  PartitionState state = detect_nonoverlapping(graph, config);
  r.seconds_game = std::chrono::duration<double>(clock::now() - start).count();
  r.sweeps = state.sweeps;

  if (overlapping) {
    start = clock::now();
    d.cover = detect_overlapping(graph, state, config);
    r.seconds_overlap = std::chrono::duration<double>(clock::now() - start).count();
  } else {
    d.cover = state.to_cover();
  }
  r.communities = d.cover.size();
  r.memberships = d.cover.membership_count();
  r.replications = r.memberships - graph.node_count();
  return d;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

std::string fixed4(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(4) << v;
  return s.str();
}

}  // namespace

int cmd_detect(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Detect communities in an edge list", "segame detect"};
  GameOptions o;
  std::string input;
  std::string output;
  std::string report_path;
  bool entropy = false;
  app.add_option("input", input, "Edge list path")->required();
  add_game_options(app, o);
  app.add_option("--threads", o.config.workers, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--output", output, "Community file (default: stdout)");
  app.add_option("--report", report_path, "Write a run report here");
  app.add_flag("--entropy", entropy, "Include the final 2D structural entropy in the report");
  if (int rc = parse_args(app, args, out, err); rc >= 0) return rc;

  return guarded(err, [&] {
    finish_game_options(app, o);
    const LoadedGraph loaded = load_graph(input, o.directed, o.weighted);
    Detection d = run_detection(loaded.graph, o.config, o.overlapping);
    d.report.input = input;
    if (entropy && d.cover.disjoint()) d.report.entropy = entropy_2d(loaded.graph, d.cover);
    if (entropy && !d.cover.disjoint()) {
      err << "note: entropy_2d is defined for partitions; omitted for an overlapping cover\n";
    }
    if (output.empty()) {
      write_cover(d.cover, loaded.ids, out);
    } else {
      auto file = open_out(output);
      write_cover(d.cover, loaded.ids, file);
    }
    if (!report_path.empty()) {
      auto file = open_out(report_path);
      d.report.write(file);
      if (!file) throw IoError("write error on '" + report_path + "'");
    }
    return static_cast<int>(kOk);
  });
}

int cmd_eval(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Score detected communities against ground truth", "segame eval"};
  std::string detected_path;
  std::string truth_path;
  std::string graph_path;
  std::string metric = "all";
  app.add_option("--detected", detected_path, "Detected community file")->required();
  app.add_option("--truth", truth_path, "Ground-truth community file")->required();
  app.add_option("--metric", metric, "Metric to print")
      ->check(CLI::IsMember({"f1", "nmi", "onmi", "all"}))
      ->capture_default_str();
  app.add_option("--graph", graph_path,
                 "Edge list fixing the node universe; labels outside it are dropped");
  if (int rc = parse_args(app, args, out, err); rc >= 0) return rc;

  return guarded(err, [&] {
    IdMap ids;
    Cover detected;
    Cover truth;
    if (!graph_path.empty()) {
      ids = load_graph(graph_path, false, true).ids;
      auto din = open_in(detected_path);
      auto tin = open_in(truth_path);
      CoverLoad d = load_cover(din, ids);
      CoverLoad t = load_cover(tin, ids);
      if (d.dropped_labels + t.dropped_labels > 0) {
        err << "note: dropped " << d.dropped_labels + t.dropped_labels
            << " labels not present in the graph\n";
      }
      detected = std::move(d.cover);
      truth = std::move(t.cover);
    } else {
      auto din = open_in(detected_path);
      auto tin = open_in(truth_path);
      detected = load_cover_extending(din, ids);
      truth = load_cover_extending(tin, ids);
    }
    if (detected.empty() || truth.empty()) {
      throw ValidationError("both community files must contain at least one community");
    }

    std::vector<std::pair<std::string, double>> rows;
    if (metric == "f1" || metric == "all") rows.emplace_back("f1", avg_f1(detected, truth));
    if (metric == "onmi" || metric == "all") {
      rows.emplace_back("onmi", onmi(detected, truth, ids.size()));
    }
    if (metric == "nmi") rows.emplace_back("nmi", nmi(detected, truth));
    if (metric == "all") {
      try {
        rows.emplace_back("nmi", nmi(detected, truth));
      } catch (const ValidationError& e) {
        err << "note: nmi skipped: " << e.what() << '\n';
      }
    }
    for (const auto& [name, value] : rows) out << name << '\t' << fixed4(value) << '\n';
    return static_cast<int>(kOk);
  });
}

int cmd_bench(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Time detection over inputs and worker counts", "segame bench"};
  GameOptions o;
  std::vector<std::string> inputs;
  std::vector<NodeId> synthetic;
  std::vector<unsigned> threads{1};
  int repeats = 1;
  double avg_degree = 16.0;
  NodeId block_size = 100;
  double mixing = 0.2;
  std::uint64_t graph_seed = 1;
  add_game_options(app, o);
  app.add_option("--input", inputs, "Edge list path (repeatable)");
  app.add_option("--synthetic", synthetic, "Generate a planted graph with N nodes (repeatable)");
  app.add_option("--threads", threads, "Worker counts, e.g. 1,2,4")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  app.add_option("--repeats", repeats, "Runs per cell; the median time is reported")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--avg-degree", avg_degree, "Synthetic average degree")->capture_default_str();
  app.add_option("--block-size", block_size, "Synthetic block size")->capture_default_str();
  app.add_option("--mixing", mixing, "Synthetic fraction of inter-block edges")
      ->capture_default_str();
  app.add_option("--graph-seed", graph_seed, "Synthetic generator seed")->capture_default_str();
  if (int rc = parse_args(app, args, out, err); rc >= 0) return rc;

  return guarded(err, [&] {
    finish_game_options(app, o);
    if (inputs.empty() && synthetic.empty()) {
      throw ValidationError("bench needs at least one --input or --synthetic");
    }
    struct Case {
      std::string name;
      Graph graph;
    };
    std::vector<Case> cases;
    for (const auto& path : inputs) cases.push_back({path, load_graph(path, o.directed, o.weighted).graph});
    for (NodeId n : synthetic) {
      cases.push_back({"planted:" + std::to_string(n),
                       sparse_planted_partition(n, block_size, avg_degree, mixing, graph_seed).graph});
    }

    out << kBenchHeader << '\n'
        << "# input\tnodes\tedges\tthreads\trepeats\tmedian_seconds\titerations\tcommunities"
           "\tratio_prev\n";
    std::map<unsigned, double> previous;
    const auto precision = out.precision();
    out << std::setprecision(6);
    for (const Case& c : cases) {
      for (unsigned t : threads) {
        DetectorConfig config = o.config;
        config.workers = t;
        std::vector<double> times;
        Detection last;
        for (int r = 0; r < repeats; ++r) {
          last = run_detection(c.graph, config, o.overlapping);
          times.push_back(last.report.seconds_total());
        }
        const double m = median(times);
        out << c.name << '\t' << c.graph.node_count() << '\t' << c.graph.edge_count() << '\t' << t
            << '\t' << repeats << '\t' << m << '\t' << last.report.iterations() << '\t'
            << last.report.communities << '\t';
        if (auto it = previous.find(t); it != previous.end() && it->second > 0.0) {
          out << m / it->second;
        } else {
          out << '-';
        }
        out << '\n';
        previous[t] = m;
      }
    }
    out.precision(precision);
    return static_cast<int>(kOk);
  });
}

int cmd_stats(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Print basic statistics of an edge list", "segame stats"};
  std::string input;
  bool directed = false;
  bool weighted = false;
  app.add_option("input", input, "Edge list path")->required();
  app.add_flag("--directed", directed, "Treat edges as directed");
  app.add_flag("--weighted", weighted, "Read a third weight column");
  if (int rc = parse_args(app, args, out, err); rc >= 0) return rc;

  return guarded(err, [&] {
    const Graph g = load_graph(input, directed, weighted).graph;
    std::size_t isolated = 0;
    std::size_t loops = 0;
    for (NodeId x = 0; x < g.node_count(); ++x) {
      if (g.isolated(x)) ++isolated;
      if (g.self_loop(x) > 0.0) ++loops;
    }
    const auto precision = out.precision();
    out << std::setprecision(12) << "nodes\t" << g.node_count() << '\n'
        << "edges\t" << g.edge_count() << '\n'
        << "directed\t" << (g.directed() ? 1 : 0) << '\n'
        << "total_weight\t" << g.total_weight() << '\n'
        << "volume\t" << g.total_volume() << '\n'
        << "isolated\t" << isolated << '\n'
        << "self_loops\t" << loops << '\n'
        << "singleton_entropy\t" << node_entropy_baseline(g) << '\n';
    out.precision(precision);
    return static_cast<int>(kOk);
  });
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  static constexpr const char* kUsage =
      "usage: segame <detect|eval|bench|stats> [options]\n"
      "       segame <command> --help\n";
  if (args.empty()) {
    err << kUsage;
    return kUsageError;
  }
  const std::string& cmd = args.front();
  const std::vector<std::string> rest(args.begin() + 1, args.end());
  if (cmd == "detect") return cmd_detect(rest, out, err);
  if (cmd == "eval") return cmd_eval(rest, out, err);
  if (cmd == "bench") return cmd_bench(rest, out, err);
  if (cmd == "stats") return cmd_stats(rest, out, err);
  if (cmd == "-h" || cmd == "--help") {
    out << kUsage;
    return kOk;
  }
  err << "unknown command '" << cmd << "'\n" << kUsage;
  return kUsageError;
}

}  // namespace segame::cli
