#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "acq/rng.hpp"
#include "acq/strategies.hpp"

namespace acq::experiment {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Edge probability as a constant or as factor * ln n / n.
struct PSpec {
  enum class Kind { constant, ln_factor };
  Kind kind = Kind::constant;
  double value = 0;

  double resolve(std::size_t n) const;
};

enum class Strategy { oscillation, team, caterpillar, tree, general };
Strategy parse_strategy(const std::string& name);
const char* to_string(Strategy s);

struct Config {
  std::vector<std::size_t> n;
  std::vector<PSpec> p;
  std::size_t seeds = 1;
  Seed base_seed = 0;
  Strategy strategy = Strategy::team;
  TeamMode mode = TeamMode::direct;
  double eps = 1.0;
  /// Spine length as a fraction of n for caterpillar instances.
  double spine_fraction = 0.25;
  std::string output;  // empty: stdout
};

/// Parses the JSON experiment config; throws ConfigError.
Config parse_config(const std::string& json_text);

struct ResultRow {
  std::size_t n = 0;
  double p = 0;
  Seed seed = 0;
  Strategy strategy = Strategy::team;
  std::size_t rounds = 0;
  bool completed = false;
  std::size_t acquainted_pairs = 0;
  /// rounds * p / ln n for G(n,p) strategies, rounds * log2 n / n^2 for the
  /// tree and general strategies, rounds / n for caterpillars.
  double ratio = 0;
};

/// Per-cell seed: SplitMix64 chained over base seed, n, p index and replicate.
Seed cell_seed(Seed base, std::size_t n, std::size_t p_index, std::size_t replicate);

/// One instance: sample the graph, build the strategy, replay it.
ResultRow run_cell(const Config& cfg, std::size_t n, std::size_t p_index, std::size_t replicate);

/// All cells, sorted by (n, p, seed). threads == 0 runs inline.
std::vector<ResultRow> run(const Config& cfg, unsigned threads);

/// Worker count from ACQ_THREADS, defaulting to the hardware concurrency.
unsigned threads_from_env();

inline constexpr const char* kCsvHeader = "n,p,seed,strategy,rounds,completed,acquainted_pairs,ratio";
void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);

}  // namespace acq::experiment
