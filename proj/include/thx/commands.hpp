#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "thx/evaluation.hpp"
#include "thx/graph.hpp"
#include "thx/report.hpp"

namespace thx {

enum class Engine { kStream, kRecurs };

Engine parse_engine(const std::string& s);
std::string to_string(Engine e);

/// Everything a CLI invocation needs. Commands ignore fields they do not use.
struct RunConfig {
  std::string command;
  std::string input;
  bool undirected = false;
  Direction direction = Direction::kOut;
  std::size_t n = 1;
  std::optional<std::int64_t> k;
  Engine algorithm = Engine::kStream;
  std::string format = "csv";
  std::optional<std::pair<Time, Time>> interval;
  std::string output;
  bool strict = false;

  // reach-scores
  std::string method = "thi";  // thi | kcore | khcore
  std::size_t kh_threshold = 4;

  // sir-eval
  std::vector<double> beta_sweep = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
  std::vector<std::size_t> n_values = {32, 64};
  SirParams sir;
  bool self_check = false;

  // bench
  std::vector<std::size_t> n_sweep = {1, 2, 4, 8, 16};
  std::size_t reps = 1;
  std::vector<Engine> bench_engines = {Engine::kStream};
  std::size_t synthetic_nodes = 0;
  std::size_t synthetic_edges = 0;
  Time synthetic_max_time = 1000;
  std::uint64_t synthetic_seed = 1;
};

nlohmann::json config_to_json(const RunConfig& cfg);

/// Output of one command: the rendered document plus non-fatal warnings.
struct CommandResult {
  std::string body;
  std::vector<std::string> warnings;
  int exit_code = 0;
};

/// Loads cfg.input (undirected expansion, interval restriction applied).
TemporalGraph load_input(const RunConfig& cfg);

/// Table builders, exposed for tests.
Table compute_table_report(const TemporalGraph& g, const RunConfig& cfg);
Table decompose_report(const TemporalGraph& g, const RunConfig& cfg);
Table reach_scores_report(const TemporalGraph& g, const RunConfig& cfg);
Table sir_eval_report(const TemporalGraph& g, const RunConfig& cfg,
                      std::vector<std::string>& warnings);
Table bench_report(const TemporalGraph& g, const RunConfig& cfg);

CommandResult run_compute(const RunConfig& cfg);
CommandResult run_decompose(const RunConfig& cfg);
CommandResult run_reach_scores(const RunConfig& cfg);
CommandResult run_sir_eval(const RunConfig& cfg);
CommandResult run_bench(const RunConfig& cfg);

/// Exit codes of the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitDegenerate = 3;

}  // namespace thx
