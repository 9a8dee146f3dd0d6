#include "acq/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "acq/graph.hpp"
#include "acq/process.hpp"

namespace acq::experiment {

using nlohmann::json;

double PSpec::resolve(std::size_t n) const {
  if (kind == Kind::constant) return value;
  const double nn = static_cast<double>(n);
  return value * std::log(nn) / nn;
}

Strategy parse_strategy(const std::string& name) {
  if (name == "oscillation") return Strategy::oscillation;
  if (name == "team") return Strategy::team;
  if (name == "caterpillar") return Strategy::caterpillar;
  if (name == "tree") return Strategy::tree;
  if (name == "general") return Strategy::general;
  throw ConfigError("unknown strategy '" + name + "'");
}

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::oscillation: return "oscillation";
    case Strategy::team: return "team";
    case Strategy::caterpillar: return "caterpillar";
    case Strategy::tree: return "tree";
    case Strategy::general: return "general";
  }
  return "?";
}

namespace {

bool uses_p(Strategy s) { return s != Strategy::tree && s != Strategy::caterpillar; }

}  // namespace

Config parse_config(const std::string& json_text) {
  Config cfg;
  try {
    const json j = json::parse(json_text);
    for (const auto& n : j.value("n", json::array())) {
      const auto v = n.get<std::int64_t>();
      if (v < 2) throw ConfigError("every n must be >= 2");
      cfg.n.push_back(static_cast<std::size_t>(v));
    }
    for (const auto& p : j.value("p", json::array())) {
      PSpec spec;
      if (p.is_number()) {
        spec.value = p.get<double>();
      } else if (p.is_object() && p.contains("ln_factor")) {
        spec.kind = PSpec::Kind::ln_factor;
        spec.value = p.at("ln_factor").get<double>();
      } else {
        throw ConfigError("p entries are numbers or {\"ln_factor\": c}");
      }
      cfg.p.push_back(spec);
    }
    const auto seeds = j.value("seeds", std::int64_t{1});
    if (seeds < 1) throw ConfigError("seeds must be >= 1");
    cfg.seeds = static_cast<std::size_t>(seeds);
    cfg.base_seed = j.value("base_seed", std::uint64_t{0});
    cfg.strategy = parse_strategy(j.value("strategy", std::string("team")));
    const std::string mode = j.value("mode", std::string("direct"));
    if (mode != "direct" && mode != "strict") throw ConfigError("mode is direct or strict");
    cfg.mode = mode == "strict" ? TeamMode::strict : TeamMode::direct;
    cfg.eps = j.value("eps", 1.0);
    cfg.spine_fraction = j.value("spine_fraction", 0.25);
    if (!(cfg.spine_fraction > 0 && cfg.spine_fraction <= 1)) throw ConfigError("spine_fraction must be in (0,1]");
    cfg.output = j.value("output", std::string());
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config: ") + e.what());
  }
  if (uses_p(cfg.strategy)) {
    for (std::size_t n : cfg.n) {
      for (const PSpec& p : cfg.p) {
        const double v = p.resolve(n);
        if (!(v > 0 && v < 1)) throw ConfigError("p does not resolve into (0,1) for n=" + std::to_string(n));
      }
    }
  }
  return cfg;
}

Seed cell_seed(Seed base, std::size_t n, std::size_t p_index, std::size_t replicate) {
  Seed s = mix64(base);
  s = mix64(s ^ n);
  s = mix64(s ^ p_index);
  return mix64(s ^ replicate);
}

ResultRow run_cell(const Config& cfg, std::size_t n, std::size_t p_index, std::size_t replicate) {
  ResultRow row;
  row.n = n;
  row.strategy = cfg.strategy;
  row.seed = cell_seed(cfg.base_seed, n, p_index, replicate);
  const double nn = static_cast<double>(n);

  if (!uses_p(cfg.strategy)) {
    std::optional<Tree> tree;
    std::optional<CaterpillarTree> cat;
    if (cfg.strategy == Strategy::tree) {
      tree = random_tree(n, row.seed);
    } else {
      const auto spine = std::clamp<std::size_t>(
          static_cast<std::size_t>(std::llround(cfg.spine_fraction * nn)), 2, n);
      cat = random_caterpillar(n, spine, row.seed);
    }
    const Graph& g = tree ? tree->graph() : cat->tree.graph();
    Replay replay(g);
    if (tree) {
      tree_strategy(*tree, replay);
    } else {
      caterpillar_strategy(*cat, replay);
    }
    const RunReport rep = replay.report();
    row.rounds = rep.rounds_executed;
    row.completed = rep.completed;
    row.acquainted_pairs = rep.acquainted_per_round.back();
    row.ratio = tree ? static_cast<double>(row.rounds) * std::log2(nn) / (nn * nn)
                     : static_cast<double>(row.rounds) / nn;
    return row;
  }

  row.p = cfg.p[p_index].resolve(n);
  const Graph g = gnp_sample(n, row.p, row.seed);
  row.acquainted_pairs = g.m();
  try {
    Replay replay(g);
    if (cfg.strategy == Strategy::general) {
      general_graph_strategy(g, replay);
    } else {
      const Seed path_seed = mix64(row.seed ^ 0x68616d696c746f6eULL);
      Schedule s;
      if (cfg.strategy == Strategy::team) {
        s = gnp_team_strategy(g, row.p, cfg.mode, cfg.eps, path_seed);
      } else {
        auto path = find_hamiltonian_path(g, path_seed);
        if (!path) throw NoHamiltonianPath();
        s = oscillation_on(*path, n);
      }
      for (std::size_t r = 0; r < s.rounds(); ++r) replay.emit(s.matching(r));
    }
    const RunReport rep = replay.report();
    row.rounds = rep.rounds_executed;
    row.completed = rep.completed;
    row.acquainted_pairs = rep.acquainted_per_round.back();
  } catch (const std::exception&) {
    // Recorded as an incomplete cell; the grid carries on.
    row.completed = false;
    row.rounds = 0;
  }
  if (cfg.strategy == Strategy::general) {
    row.ratio = static_cast<double>(row.rounds) * std::log2(nn) / (nn * nn);
  } else {
    row.ratio = static_cast<double>(row.rounds) * row.p / std::log(nn);
  }
  return row;
}

std::vector<ResultRow> run(const Config& cfg, unsigned threads) {
  struct Cell {
    std::size_t n, p_index, replicate;
  };
  std::vector<Cell> cells;
  const std::size_t p_count = uses_p(cfg.strategy) ? cfg.p.size() : 1;
  for (std::size_t n : cfg.n)
    for (std::size_t pi = 0; pi < p_count; ++pi)
      for (std::size_t r = 0; r < cfg.seeds; ++r) cells.push_back({n, pi, r});

  std::vector<ResultRow> rows(cells.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      rows[i] = run_cell(cfg, cells[i].n, cells[i].p_index, cells[i].replicate);
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < cells.size(); i = next++) {
        rows[i] = run_cell(cfg, cells[i].n, cells[i].p_index, cells[i].replicate);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.p != b.p) return a.p < b.p;
    return a.seed < b.seed;
  });
  return rows;
}

unsigned threads_from_env() {
  if (const char* v = std::getenv("ACQ_THREADS")) {
    char* end = nullptr;
    const long x = std::strtol(v, &end, 10);
    if (end != v && x >= 0) return static_cast<unsigned>(x);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << kCsvHeader << '\n';
  char buf[256];
  for (const ResultRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%zu,%.6g,%" PRIu64 ",%s,%zu,%s,%zu,%.6g\n", r.n, r.p, r.seed,
                  to_string(r.strategy), r.rounds, r.completed ? "true" : "false", r.acquainted_pairs,
                  r.ratio);
    out << buf;
  }
}

}  // namespace acq::experiment
