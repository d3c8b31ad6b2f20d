#include "thx/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "thx/error.hpp"
#include "thx/h_operators.hpp"
#include "thx/pseudocore.hpp"
#include "thx/reachability.hpp"
#include "thx/recurs.hpp"
#include "thx/stream.hpp"
#include "thx/synthetic.hpp"

namespace thx {

Engine parse_engine(const std::string& s) {
  if (s == "stream") return Engine::kStream;
  if (s == "recurs") return Engine::kRecurs;
  throw PreconditionError("unknown algorithm '" + s + "' (expected stream|recurs)");
}

std::string to_string(Engine e) { return e == Engine::kStream ? "stream" : "recurs"; }

nlohmann::json config_to_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["command"] = cfg.command;
  j["input"] = cfg.input;
  j["undirected"] = cfg.undirected;
  j["direction"] = std::string(to_string(cfg.direction));
  j["n"] = cfg.n;
  j["k"] = cfg.k ? nlohmann::ordered_json(*cfg.k) : nlohmann::ordered_json(nullptr);
  j["algorithm"] = to_string(cfg.algorithm);
  j["interval"] = cfg.interval
                      ? nlohmann::ordered_json::array({cfg.interval->first, cfg.interval->second})
                      : nlohmann::ordered_json(nullptr);
  j["method"] = cfg.method;
  j["kh_threshold"] = cfg.kh_threshold;
  j["beta_sweep"] = cfg.beta_sweep;
  j["n_values"] = cfg.n_values;
  j["trials"] = cfg.sir.trials;
  j["recovery_mean"] = cfg.sir.recovery_mean;
  j["rng_seed"] = cfg.sir.rng_seed;
  j["n_sweep"] = cfg.n_sweep;
  j["reps"] = cfg.reps;
  j["strict"] = cfg.strict;
  return j;
}

TemporalGraph load_input(const RunConfig& cfg) {
  if (cfg.input.empty()) throw IoError("no input file given");
  TemporalGraph g = load_edge_file(cfg.input, !cfg.undirected);
  if (cfg.interval) g = restrict_interval(g, cfg.interval->first, cfg.interval->second);
  return g;
}

namespace {

Cell int_cell(std::uint64_t x) { return static_cast<std::int64_t>(x); }

void require_engine(const TemporalGraph& g, Engine e) {
  if (e == Engine::kStream && !stream_supported(g))
    throw UnsupportedInputError(
        "stream algorithm requires transition time 1 on every edge; "
        "rerun with --algorithm recurs");
}

// Core numbers for order cfg.n with the configured engine.
std::vector<HValue> core_numbers(const TemporalGraph& g, const RunConfig& cfg) {
  require_engine(g, cfg.algorithm);
  if (cfg.algorithm == Engine::kRecurs) return recurs_compute(g, cfg.n, cfg.direction);
  HIndexTable t = cfg.direction == Direction::kOut ? stream_compute(g, cfg.n)
                                                   : stream_compute_inward(g, cfg.n);
  return t.order_values(cfg.n);
}

std::string render(const Table& table, const RunConfig& cfg) {
  if (cfg.format == "json") return render_json(table, config_to_json(cfg));
  if (cfg.format == "csv") return to_csv(table);
  throw PreconditionError("unknown format '" + cfg.format + "' (expected csv|json)");
}

void check_format(const RunConfig& cfg) {
  if (cfg.format != "csv" && cfg.format != "json")
    throw PreconditionError("unknown format '" + cfg.format + "' (expected csv|json)");
}

}  // namespace

Table compute_table_report(const TemporalGraph& g, const RunConfig& cfg) {
  require_engine(g, cfg.algorithm);
  Table table;
  table.columns.push_back("node");
  if (cfg.algorithm == Engine::kStream) {
    HIndexTable t = cfg.direction == Direction::kOut ? stream_compute(g, cfg.n)
                                                     : stream_compute_inward(g, cfg.n);
    for (std::size_t i = 0; i <= cfg.n; ++i) table.columns.push_back("h" + std::to_string(i));
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      std::vector<Cell> row{g.label(v)};
      for (std::size_t i = 0; i <= cfg.n; ++i) row.push_back(int_cell(t.at(v, i)));
      table.rows.push_back(std::move(row));
    }
  } else {
    auto h = recurs_compute(g, cfg.n, cfg.direction);
    table.columns.push_back("h" + std::to_string(cfg.n));
    for (NodeId v = 0; v < g.num_nodes(); ++v)
      table.rows.push_back({g.label(v), int_cell(h[v])});
  }
  return table;
}

Table decompose_report(const TemporalGraph& g, const RunConfig& cfg) {
  auto d = decompose(core_numbers(g, cfg), cfg.n, cfg.direction);
  Table table;
  table.columns = {"node", "core_number"};
  const HValue k_min = cfg.k ? static_cast<HValue>(std::max<std::int64_t>(*cfg.k, 0)) : 0;
  std::size_t core_size = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (d.core_number[v] < k_min) continue;
    ++core_size;
    table.rows.push_back({g.label(v), int_cell(d.core_number[v])});
  }
  std::string levels;
  for (HValue l : d.distinct_levels) {
    if (!levels.empty()) levels += ';';
    levels += std::to_string(l);
  }
  table.summary = {{"n", int_cell(cfg.n)},
                   {"direction", std::string(to_string(cfg.direction))},
                   {"tau_n", int_cell(d.distinct_levels.empty() ? 0 : d.distinct_levels.back())},
                   {"distinct_levels", int_cell(d.distinct_levels.size())},
                   {"levels", levels}};
  if (cfg.k) {
    table.summary.emplace_back("k", *cfg.k);
    table.summary.emplace_back("core_size", int_cell(core_size));
  }
  return table;
}

Table reach_scores_report(const TemporalGraph& g, const RunConfig& cfg) {
  std::vector<HValue> cores;
  if (cfg.method == "thi") {
    cores = core_numbers(g, cfg);
  } else if (cfg.method == "kcore") {
    cores = k_core(symmetrized(aggregate(g)));
  } else if (cfg.method == "khcore") {
    cores = kh_core(g, cfg.kh_threshold);
  } else {
    throw PreconditionError("unknown method '" + cfg.method + "' (expected thi|kcore|khcore)");
  }
  auto d = decompose(std::move(cores), cfg.n, cfg.direction);
  Table table;
  table.columns = {"rank", "k", "core_size", "rho_global", "rho_local"};
  std::size_t rank = 0;
  for (HValue k : d.ranked_levels()) {
    auto members = d.members(k);
    auto scores = reach_scores(g, members);
    table.rows.push_back({int_cell(rank++), int_cell(k), int_cell(members.size()),
                          scores.global, scores.local});
  }
  return table;
}

Table sir_eval_report(const TemporalGraph& g, const RunConfig& cfg,
                      std::vector<std::string>& warnings) {
  auto heuristics = heuristic_rankings(g, cfg.n_values);
  Table table;
  table.columns = {"beta", "heuristic", "kendall_tau_b"};
  for (double beta : cfg.beta_sweep) {
    SirParams p = cfg.sir;
    p.beta = beta;
    p.validate();
    NodeRanking sir = sir_ranking(g, p);
    auto add = [&](const std::string& name, const NodeRanking& r) {
      double tau = std::numeric_limits<double>::quiet_NaN();
      try {
        tau = kendall_tau_b(r, sir);
      } catch (const DegenerateRankingError&) {
        warnings.push_back("beta=" + format_double(beta) + " heuristic=" + name +
                           ": degenerate ranking, tau-b undefined");
      } catch (const PreconditionError& e) {
        warnings.push_back("beta=" + format_double(beta) + " heuristic=" + name + ": " +
                           e.what());
      }
      table.rows.push_back({beta, name, tau});
    };
    for (const auto& h : heuristics) add(h.name, h.ranking);
    if (cfg.self_check) add("sir", sir);
  }
  return table;
}

Table bench_report(const TemporalGraph& g, const RunConfig& cfg) {
  if (cfg.reps < 1) throw PreconditionError("--reps must be >= 1");
  for (Engine e : cfg.bench_engines) require_engine(g, e);
  Table table;
  table.columns = {"algorithm", "n", "wall_seconds", "peak_entries"};
  using clock = std::chrono::steady_clock;
  for (Engine e : cfg.bench_engines) {
    for (std::size_t n : cfg.n_sweep) {
      std::vector<double> walls;
      std::size_t peak = 0;
      for (std::size_t r = 0; r < cfg.reps; ++r) {
        const auto start = clock::now();
        if (e == Engine::kStream) {
          auto t = cfg.direction == Direction::kOut ? stream_compute(g, n, &peak)
                                                    : stream_compute_inward(g, n, &peak);
          (void)t;
        } else {
          auto h = recurs_compute(g, n, cfg.direction, {}, &peak);
          (void)h;
        }
        walls.push_back(std::chrono::duration<double>(clock::now() - start).count());
      }
      std::sort(walls.begin(), walls.end());
      const std::size_t m = walls.size();
      const double median = m % 2 ? walls[m / 2] : 0.5 * (walls[m / 2 - 1] + walls[m / 2]);
      table.rows.push_back({to_string(e), int_cell(n), median, int_cell(peak)});
    }
  }
  return table;
}

CommandResult run_compute(const RunConfig& cfg) {
  check_format(cfg);
  const TemporalGraph g = load_input(cfg);
  return {render(compute_table_report(g, cfg), cfg), {}, kExitOk};
}

CommandResult run_decompose(const RunConfig& cfg) {
  check_format(cfg);
  const TemporalGraph g = load_input(cfg);
  return {render(decompose_report(g, cfg), cfg), {}, kExitOk};
}

CommandResult run_reach_scores(const RunConfig& cfg) {
  check_format(cfg);
  const TemporalGraph g = load_input(cfg);
  return {render(reach_scores_report(g, cfg), cfg), {}, kExitOk};
}

CommandResult run_sir_eval(const RunConfig& cfg) {
  check_format(cfg);
  cfg.sir.validate();
  const TemporalGraph g = load_input(cfg);
  CommandResult result;
  result.body = render(sir_eval_report(g, cfg, result.warnings), cfg);
  if (cfg.strict && !result.warnings.empty()) result.exit_code = kExitDegenerate;
  return result;
}

CommandResult run_bench(const RunConfig& cfg) {
  check_format(cfg);
  TemporalGraph g;
  if (!cfg.input.empty()) {
    g = load_input(cfg);
  } else if (cfg.synthetic_edges > 0) {
    const std::size_t nodes =
        cfg.synthetic_nodes > 0 ? cfg.synthetic_nodes : std::max<std::size_t>(2, cfg.synthetic_edges / 10);
    g = random_temporal_graph(nodes, cfg.synthetic_edges, cfg.synthetic_max_time,
                              cfg.synthetic_seed);
  } else {
    throw IoError("bench needs --input or --synthetic-edges");
  }
  return {render(bench_report(g, cfg), cfg), {}, kExitOk};
}

}  // namespace thx
