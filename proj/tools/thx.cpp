// Command-line front end: temporal H-index tables, pseudocore
// decompositions, reachability scores, SIR evaluation and benchmarks.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "thx/commands.hpp"
#include "thx/error.hpp"
#include "thx/synthetic.hpp"

namespace {

using namespace thx;

std::pair<Time, Time> parse_interval(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw PreconditionError("--interval expects a:b");
  auto bound = [](const std::string& x, Time fallback) -> Time {
    if (x.empty() || x == "inf") return fallback;
    std::size_t used = 0;
    Time v = std::stoll(x, &used);
    if (used != x.size()) throw PreconditionError("bad interval bound '" + x + "'");
    return v;
  };
  try {
    return {bound(s.substr(0, colon), 0), bound(s.substr(colon + 1), kInfinity)};
  } catch (const std::logic_error&) {
    throw PreconditionError("bad interval '" + s + "'");
  }
}

// Writes next to the target and renames, so failures never leave partial files.
void write_output(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << body;
    if (!out) throw IoError("cannot write '" + path + "'");
  }
  std::filesystem::rename(tmp, path);
}

struct Raw {
  std::string direction = "out";
  std::string algorithm = "stream";
  std::string interval;
  std::int64_t k = -1;
  std::vector<std::string> engines = {"stream"};
  std::size_t gen_nodes = 100;
  std::size_t gen_edges = 1000;
  std::string gen_kind = "random";
};

void add_common(CLI::App* sub, RunConfig& cfg, Raw& raw) {
  sub->add_option("--input,-i", cfg.input, "Edge-list file (u v t [lambda])")->required();
  sub->add_flag("--undirected", cfg.undirected, "Insert both directions for every line");
  sub->add_option("--interval", raw.interval, "Keep edges with t >= a and t + lambda <= b (a:b)");
  sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--output,-o", cfg.output, "Output path (default stdout)");
  sub->add_flag("--strict", cfg.strict, "Treat degenerate-analysis warnings as errors");
}

void add_index_options(CLI::App* sub, RunConfig& cfg, Raw& raw) {
  sub->add_option("--n", cfg.n, "Order of the temporal H-index");
  sub->add_option("--direction", raw.direction, "in or out")->check(CLI::IsMember({"in", "out"}));
  sub->add_option("--algorithm", raw.algorithm, "stream or recurs")
      ->check(CLI::IsMember({"stream", "recurs"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temporal n-th order H-index toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  Raw raw;

  auto* compute = app.add_subcommand("compute", "h^(i) table per node");
  add_common(compute, cfg, raw);
  add_index_options(compute, cfg, raw);

  auto* decompose = app.add_subcommand("decompose", "(n,k)-pseudocore decomposition");
  add_common(decompose, cfg, raw);
  add_index_options(decompose, cfg, raw);
  decompose->add_option("--k", raw.k, "Only list nodes of the (n,k)-pseudocore");

  auto* reach = app.add_subcommand("reach-scores", "Reachability scores per core level");
  add_common(reach, cfg, raw);
  add_index_options(reach, cfg, raw);
  reach->add_option("--method", cfg.method, "thi, kcore or khcore")
      ->check(CLI::IsMember({"thi", "kcore", "khcore"}));
  reach->add_option("--kh-threshold", cfg.kh_threshold, "h of the (k,h)-core baseline");

  auto* sir = app.add_subcommand("sir-eval", "Kendall tau-b of heuristics against SIR");
  add_common(sir, cfg, raw);
  sir->add_option("--n", cfg.n_values, "Orders of the temporal H-index heuristic")
      ->delimiter(',');
  sir->add_option("--beta-sweep", cfg.beta_sweep, "Infection probabilities")->delimiter(',');
  sir->add_option("--trials", cfg.sir.trials, "Simulations per seed node");
  sir->add_option("--recovery-mean", cfg.sir.recovery_mean, "Mean recovery delay");
  sir->add_option("--rng-seed", cfg.sir.rng_seed, "Master seed");
  sir->add_flag("--self-check", cfg.self_check, "Add the SIR ranking against itself");

  auto* bench = app.add_subcommand("bench", "Wall time and memory over an n sweep");
  bench->add_option("--input,-i", cfg.input, "Edge-list file");
  bench->add_flag("--undirected", cfg.undirected, "Insert both directions for every line");
  bench->add_option("--interval", raw.interval, "a:b");
  bench->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  bench->add_option("--output,-o", cfg.output, "Output path (default stdout)");
  bench->add_option("--n", cfg.n_sweep, "Orders to time")->delimiter(',');
  bench->add_option("--direction", raw.direction, "in or out")->check(CLI::IsMember({"in", "out"}));
  bench->add_option("--algorithm", raw.engines, "stream and/or recurs")
      ->delimiter(',')
      ->check(CLI::IsMember({"stream", "recurs"}));
  bench->add_option("--reps", cfg.reps, "Repetitions (median reported)");
  bench->add_option("--synthetic-edges", cfg.synthetic_edges, "Random graph instead of --input");
  bench->add_option("--synthetic-nodes", cfg.synthetic_nodes, "Node count of the random graph");
  bench->add_option("--synthetic-max-time", cfg.synthetic_max_time, "Time range of the random graph");
  bench->add_option("--rng-seed", cfg.synthetic_seed, "Seed of the random graph");

  auto* generate = app.add_subcommand("generate", "Write a synthetic edge list");
  std::uint64_t gen_seed = 1;
  Time gen_max_time = 1000;
  double gen_exponent = 1.0;
  generate->add_option("--kind", raw.gen_kind, "random, undirected or broadcast")
      ->check(CLI::IsMember({"random", "undirected", "broadcast"}));
  generate->add_option("--nodes", raw.gen_nodes, "Node count");
  generate->add_option("--edges", raw.gen_edges, "Edge (contact, message) count");
  generate->add_option("--max-time", gen_max_time, "Times drawn from [1, max-time]");
  generate->add_option("--exponent", gen_exponent, "Activity exponent (broadcast)");
  generate->add_option("--rng-seed", gen_seed, "Seed");
  generate->add_option("--output,-o", cfg.output, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitPrecondition;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.direction = parse_direction(raw.direction);
    cfg.algorithm = parse_engine(raw.algorithm);
    if (raw.k >= 0) cfg.k = raw.k;
    if (!raw.interval.empty()) cfg.interval = parse_interval(raw.interval);
    cfg.bench_engines.clear();
    for (const auto& e : raw.engines) cfg.bench_engines.push_back(parse_engine(e));

    CommandResult result;
    if (cfg.command == "compute") result = run_compute(cfg);
    else if (cfg.command == "decompose") result = run_decompose(cfg);
    else if (cfg.command == "reach-scores") result = run_reach_scores(cfg);
    else if (cfg.command == "sir-eval") result = run_sir_eval(cfg);
    else if (cfg.command == "bench") result = run_bench(cfg);
    else {
      TemporalGraph g;
      if (raw.gen_kind == "random")
        g = random_temporal_graph(raw.gen_nodes, raw.gen_edges, gen_max_time, gen_seed);
      else if (raw.gen_kind == "undirected")
        g = random_undirected_temporal_graph(raw.gen_nodes, raw.gen_edges, gen_max_time, gen_seed);
      else
        g = broadcast_hub_graph(raw.gen_nodes, raw.gen_edges, gen_max_time, gen_exponent, gen_seed);
      std::ostringstream out;
      write_edge_stream(out, g);
      result.body = out.str();
    }

    for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
    if (result.exit_code == kExitDegenerate) {
      std::cerr << "error: degenerate analysis with --strict\n";
      return result.exit_code;
    }
    write_output(cfg.output, result.body);
    return result.exit_code;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const DegenerateRankingError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
}
