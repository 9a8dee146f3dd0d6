// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "acq/bounds.hpp"
#include "acq/exact.hpp"
#include "acq/experiment.hpp"
#include "acq/graph.hpp"
#include "acq/process.hpp"
#include "acq/strategies.hpp"

using namespace acq;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failure messages.
class Check {
 public:
  void operator()(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_++ < 5) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  Outcome done(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failure(s): " + notes_ + " | " + summary};
  }

 private:
  std::size_t failures_ = 0;
  std::string notes_;
};

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

// Independent checks: plain arrays, no library replay.
bool is_matching_of(const Graph& g, std::span<const Edge> m, std::vector<char>& used) {
  std::fill(used.begin(), used.end(), 0);
  for (const Edge& e : m) {
    if (e.u >= g.n() || e.v >= g.n() || !g.has_edge(e.u, e.v) || used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

bool adjacency_path_check(const Graph& g, const std::vector<Vertex>& path) {
  if (path.size() != g.n()) return false;
  std::vector<char> seen(g.n(), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= g.n() || seen[path[i]]) return false;
    seen[path[i]] = 1;
    if (i > 0) {
      const auto nb = g.neighbors(path[i - 1]);
      if (std::find(nb.begin(), nb.end(), path[i]) == nb.end()) return false;
    }
  }
  return true;
}

// 1. Oscillation on P_n.
Outcome oscillation_on_paths() {
  Check check;
  for (std::size_t n = 1; n <= 256; ++n) {
    const Graph g = path_graph(n);
    const Schedule s = oscillation_schedule(n);
    check(s.rounds() <= 2 * n, fmt("n=%zu: %zu rounds", n, s.rounds()));
    const RunReport r = run_schedule(g, s, true);
    check(r.completed && r.completion_round && *r.completion_round <= 2 * n, fmt("n=%zu incomplete", n));
    check(r.all_visited, fmt("n=%zu: not all visited", n));

    // Visit matrix recomputed from raw positions.
    std::vector<Vertex> at(n);
    std::iota(at.begin(), at.end(), 0);
    std::vector<char> visited(n * n, 0), used(n);
    for (Vertex v = 0; v < n; ++v) visited[at[v] * n + v] = 1;
    for (std::size_t i = 0; i < s.rounds(); ++i) {
      check(is_matching_of(g, s.matching(i), used), fmt("n=%zu round %zu illegal", n, i + 1));
      for (const Edge& e : s.matching(i)) std::swap(at[e.u], at[e.v]);
      for (Vertex v = 0; v < n; ++v) visited[at[v] * n + v] = 1;
    }
    check(std::all_of(visited.begin(), visited.end(), [](char c) { return c != 0; }),
          fmt("n=%zu: independent visit matrix has gaps", n));
  }
  return check.done("n = 1..256, all complete within 2n rounds with every agent on every vertex");
}

// 2. Small-graph relations.
Outcome small_graph_suite() {
  Check check;
  std::size_t small = 0, five = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    exact::for_each_connected_graph(n, [&](const Graph& g) {
      (n <= 4 ? small : five)++;
      const std::size_t ac = exact::exact_ac(g);
      const std::string id = fmt("n=%zu m=%zu", n, g.m());
      if (g.m() == n * (n - 1) / 2) check(ac == 0, "complete graph " + id + " has ac>0");
      if (g.m() == 0) return;  // K_1
      const std::size_t bac = exact::exact_bac(g);
      const std::size_t cover = exact::cover_number(g);
      check(bac <= ac, "bac > ac on " + id);
      check(static_cast<std::int64_t>(ac) >= bounds::trivial_lower(n, g.m()).ceil(), "counting bound on " + id);
      check(cover == bac + 1, "cover != bac + 1 on " + id);
    });
  }
  check(five == 728, fmt("%zu graphs on 5 vertices", five));
  return check.done(fmt("%zu connected graphs with n <= 4, %zu with n = 5", small, five));
}

// 3. Pinned values.
Outcome pinned_values() {
  Check check;
  const std::size_t ac3 = exact::exact_ac(path_graph(3));
  const std::size_t ac4 = exact::exact_ac(path_graph(4));
  const std::size_t bac4 = exact::exact_bac(path_graph(4));
  const std::size_t cov3 = exact::cover_number(path_graph(3));
  check(ac3 == 1, "ac(P3)");
  check(ac4 == 2, "ac(P4)");
  check(bac4 == 1, "bac(P4)");
  check(cov3 == 2, "cover(P3)");
  return check.done(fmt("ac(P3)=%zu ac(P4)=%zu bac(P4)=%zu cover(P3)=%zu", ac3, ac4, bac4, cov3));
}

// 4. Team strategy scaling.
Outcome team_scaling() {
  Check check;
  std::string summary;
  double worst_ratio = 0;
  for (std::size_t n : {512u, 1024u, 2048u, 4096u}) {
    const double nn = static_cast<double>(n);
    for (double p : {0.2, 0.1, 3.0 * std::log(nn) / nn}) {
      const std::size_t expected_len =
          std::min<std::size_t>(2 * static_cast<std::size_t>(std::ceil(bounds::team_k(nn, p))), 2 * n);
      std::size_t completed = 0;
      for (std::size_t rep = 0; rep < 100; ++rep) {
        const Seed seed = experiment::cell_seed(4, n, static_cast<std::size_t>(p * 1e6), rep);
        const Graph g = gnp_sample(n, p, seed);
        Schedule s;
        try {
          s = gnp_team_strategy(g, p, TeamMode::direct, 1.0, mix64(seed));
        } catch (const NoHamiltonianPath&) {
          continue;
        }
        check(s.rounds() == expected_len, fmt("n=%zu p=%g: length %zu, expected %zu", n, p, s.rounds(), expected_len));
        const RunReport r = run_schedule(g, s);
        if (!r.completed) continue;
        ++completed;
        const double ratio = static_cast<double>(s.rounds()) * p / std::log(nn);
        worst_ratio = std::max(worst_ratio, ratio);
        check(ratio <= 6.0, fmt("n=%zu p=%g: ratio %g", n, p, ratio));
      }
      check(completed >= 95, fmt("n=%zu p=%g: %zu/100 complete", n, p, completed));
      summary += fmt("%s%zu/%g:%zu", summary.empty() ? "" : " ", n, p, completed);
    }
  }
  return check.done(fmt("completed per (n/p): %s; max ratio %.4f", summary.c_str(), worst_ratio));
}

// 5. Lower-bound formulas.
Outcome lower_bound_formulas() {
  Check check;
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const double n = 10.0 + 97.0 * i;
    const double p = 0.001 + 0.0098 * i;
    const double eps = 0.1 + 0.009 * i;
    const double composed = eps / 2.0 * (std::log(n) / -std::log(1.0 - p));
    const double diff = std::abs(bounds::gnp_lower_threshold(n, p, eps) - composed);
    worst = std::max(worst, diff);
    check(diff <= 1e-9, fmt("grid point %d off by %g", i, diff));
  }
  std::size_t samples = 0, edgeless = 0;
  for (double p : {0.5, 0.8}) {
    for (Seed s = 0; s < 50; ++s) {
      const Graph g = gnp_sample(5, p, experiment::cell_seed(5, 5, static_cast<std::size_t>(p * 10), s));
      ++samples;
      if (g.m() == 0) {
        ++edgeless;
        continue;
      }
      const std::size_t bac = exact::exact_bac(g);
      const std::size_t cover = exact::cover_number(g);
      check(static_cast<std::int64_t>(bac) >= bounds::trivial_lower(5, g.m()).ceil(), fmt("bac bound, m=%zu", g.m()));
      check(cover >= (10 + g.m() - 1) / g.m(), fmt("cover bound, m=%zu", g.m()));
    }
  }
  return check.done(fmt("max formula deviation %.3g; %zu samples of G(5,p), %zu edgeless skipped", worst, samples, edgeless));
}

// 6. Caterpillars in random trees.
Outcome caterpillar_sizes() {
  Check check;
  std::string summary;
  for (std::size_t n : {100u, 1000u, 10000u, 100000u}) {
    const auto need = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n))));
    std::size_t smallest = n;
    for (Seed s = 0; s < 1000; ++s) {
      const Tree t = random_tree(n, experiment::cell_seed(6, n, 0, s));
      const Caterpillar c = largest_caterpillar(t);
      check(is_caterpillar_in(t, c), fmt("n=%zu seed %llu: invalid caterpillar", n, static_cast<unsigned long long>(s)));
      check(c.size() >= need, fmt("n=%zu: size %zu < %zu", n, c.size(), need));
      smallest = std::min(smallest, c.size());
    }
    summary += fmt("%sn=%zu min %zu (need %zu)", summary.empty() ? "" : ", ", n, smallest, need);
  }
  return check.done(summary);
}

// 7. Caterpillar and tree strategy round budgets.
Outcome strategy_budgets() {
  Check check;
  double cat_worst = 0, tree_worst = 0;
  std::size_t runs = 0;
  for (std::size_t n = 64; n <= 4096; n *= 2) {
    for (double fraction : {0.1, 0.25, 0.5}) {
      for (std::size_t rep = 0; rep < 5; ++rep) {
        const Seed seed = experiment::cell_seed(7, n, static_cast<std::size_t>(fraction * 100), rep);
        const auto spine = std::max<std::size_t>(2, static_cast<std::size_t>(std::llround(fraction * n)));
        const CaterpillarTree ct = random_caterpillar(n, spine, seed);
        Replay replay(ct.tree.graph());
        try {
          caterpillar_strategy(ct, replay);
        } catch (const ProcessError& e) {
          check(false, fmt("caterpillar n=%zu: illegal round: %s", n, e.what()));
          continue;
        }
        const RunReport r = replay.report();
        ++runs;
        const double ratio = static_cast<double>(r.rounds_executed) / static_cast<double>(n);
        cat_worst = std::max(cat_worst, ratio);
        check(r.completed, fmt("caterpillar n=%zu incomplete", n));
        check(ratio <= kCaterpillarRoundsPerVertex, fmt("caterpillar n=%zu ratio %g", n, ratio));
      }
    }
  }
  for (std::size_t n = 256; n <= 4096; n *= 2) {
    for (std::size_t rep = 0; rep < 5; ++rep) {
      const Tree t = random_tree(n, experiment::cell_seed(7, n, 1, rep));
      Replay replay(t.graph());
      try {
        tree_strategy(t, replay);
      } catch (const ProcessError& e) {
        check(false, fmt("tree n=%zu: illegal round: %s", n, e.what()));
        continue;
      }
      const RunReport r = replay.report();
      ++runs;
      const double nn = static_cast<double>(n);
      const double ratio = static_cast<double>(r.rounds_executed) * std::log2(nn) / (nn * nn);
      tree_worst = std::max(tree_worst, ratio);
      check(r.completed, fmt("tree n=%zu incomplete", n));
      check(ratio <= kTreeRoundsConstant, fmt("tree n=%zu ratio %g", n, ratio));
    }
  }
  return check.done(fmt("%zu runs; caterpillar max rounds/n %.4f (budget %g), tree max rounds*log2n/n^2 %.4f (budget %g)",
                        runs, cat_worst, kCaterpillarRoundsPerVertex, tree_worst, kTreeRoundsConstant));
}

// 8. tree_route contract.
Outcome routing_contract() {
  Check check;
  Rng rng(8);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 2 + rng.below(i % 10 == 0 ? 3000 : 300);
    const Tree t = random_tree(n, rng.next());
    const std::size_t k = 1 + rng.below(std::min<std::size_t>(32, n));
    auto pick = [&] {
      std::vector<Vertex> all(n);
      std::iota(all.begin(), all.end(), 0);
      for (std::size_t j = 0; j < k; ++j) std::swap(all[j], all[j + rng.below(n - j)]);
      all.resize(k);
      return all;
    };
    const auto src = pick();
    const auto tgt = pick();
    const Schedule s = tree_route({&t, src, tgt});

    std::vector<std::uint32_t> at(n);
    std::iota(at.begin(), at.end(), 0);
    std::vector<char> used(n);
    for (std::size_t r = 0; r < s.rounds(); ++r) {
      check(is_matching_of(t.graph(), s.matching(r), used), fmt("instance %d round %zu illegal", i, r + 1));
      for (const Edge& e : s.matching(r)) std::swap(at[e.u], at[e.v]);
    }
    const std::set<std::uint32_t> team(src.begin(), src.end());
    std::set<Vertex> landed;
    for (Vertex v = 0; v < n; ++v)
      if (team.count(at[v])) landed.insert(v);
    check(landed == std::set<Vertex>(tgt.begin(), tgt.end()), fmt("instance %d: team not on targets", i));

    // Longest source-target distance, by BFS from every source.
    std::size_t ell = 0;
    for (Vertex x : src) {
      const auto d = bfs_distances(t.graph(), x);
      for (Vertex y : tgt) ell = std::max<std::size_t>(ell, d[y]);
    }
    const std::size_t ref = ell + 2 * (k - 1);
    check(s.rounds() <= 4 * ref, fmt("instance %d: %zu rounds > 4*%zu", i, s.rounds(), ref));
    if (ref > 0) worst = std::max(worst, static_cast<double>(s.rounds()) / static_cast<double>(ref));
  }
  return check.done(fmt("1000 instances, worst rounds/(l+2(k-1)) = %.3f", worst));
}

// 9. Determinism.
Outcome determinism() {
  Check check;
  const char* configs[] = {
      R"({"n": [128, 256], "p": [0.2, {"ln_factor": 3}], "seeds": 5, "base_seed": 9, "strategy": "team"})",
      R"({"n": [100], "p": [0.3], "seeds": 3, "strategy": "oscillation"})",
      R"({"n": [64, 200], "seeds": 3, "strategy": "caterpillar"})",
      R"({"n": [150], "seeds": 3, "strategy": "tree"})",
      R"({"n": [80], "p": [0.1], "seeds": 3, "strategy": "general"})",
  };
  for (const char* text : configs) {
    const auto cfg = experiment::parse_config(text);
    std::string first;
    for (unsigned threads : {0u, 0u, 2u}) {
      std::ostringstream os;
      experiment::write_csv(os, experiment::run(cfg, threads));
      if (first.empty()) first = os.str();
      check(os.str() == first, std::string("CSV differs for ") + text);
    }
  }
  std::size_t graphs = 0;
  for (std::size_t n : {1u, 2u, 10u, 300u, 2000u}) {
    for (double p : {0.0, 0.01, 0.3, 1.0}) {
      for (Seed s = 0; s < 3; ++s) {
        const Graph g = gnp_sample(n, p, s);
        std::istringstream in(to_text(g));
        const Graph back = read_graph(in);
        check(back == g && to_text(back) == to_text(g), fmt("round trip n=%zu p=%g", n, p));
        ++graphs;
      }
    }
  }
  return check.done(fmt("5 configs x 3 runs byte-identical; %zu graphs round-tripped", graphs));
}

// 10. Hamiltonian path finder.
Outcome hamiltonian_finder() {
  Check check;
  std::string summary;
  for (std::size_t n : {256u, 512u, 1024u}) {
    const double nn = static_cast<double>(n);
    const double p = 3.0 * std::log(nn) / nn;
    std::size_t found = 0;
    for (Seed s = 0; s < 100; ++s) {
      const Graph g = gnp_sample(n, p, experiment::cell_seed(10, n, 0, s));
      const auto path = find_hamiltonian_path(g, s);
      if (!path) continue;
      ++found;
      check(adjacency_path_check(g, *path), fmt("n=%zu seed %llu: bad path", n, static_cast<unsigned long long>(s)));
    }
    check(found >= 95, fmt("n=%zu: %zu/100", n, found));
    summary += fmt("%sn=%zu %zu/100", summary.empty() ? "" : ", ", n, found);
  }
  return check.done(summary);
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"oscillation on paths", oscillation_on_paths},
      {"small-graph exact relations", small_graph_suite},
      {"pinned small values", pinned_values},
      {"team strategy scaling", team_scaling},
      {"lower-bound formulas", lower_bound_formulas},
      {"caterpillars in random trees", caterpillar_sizes},
      {"caterpillar and tree round budgets", strategy_budgets},
      {"tree routing contract", routing_contract},
      {"determinism", determinism},
      {"Hamiltonian path finder", hamiltonian_finder},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, secs, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
