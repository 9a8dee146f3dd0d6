#include <doctest.h>

#include <cmath>

#include "acq/strategies.hpp"
#include "oracles.hpp"

using namespace acq;

namespace {

// Every round is a set of disjoint graph edges.
bool legal(const Graph& g, const Schedule& s) {
  for (std::size_t r = 0; r < s.rounds(); ++r) {
    std::vector<char> used(g.n(), 0);
    for (const Edge& e : s.matching(r)) {
      if (!g.has_edge(e.u, e.v) || used[e.u] || used[e.v]) return false;
      used[e.u] = used[e.v] = 1;
    }
  }
  return true;
}

bool naive_completes(const Graph& g, const Schedule& s) {
  oracle::NaiveReplay r(g);
  for (std::size_t i = 0; i < s.rounds(); ++i) r.swap_round({s.matching(i).begin(), s.matching(i).end()});
  return r.complete();
}

}  // namespace

TEST_CASE("oscillation on P_n visits everything in 2n rounds") {
  for (std::size_t n = 1; n <= 40; ++n) {
    const Graph g = oracle::path(n);
    const Schedule s = oscillation_schedule(n);
    CHECK(s.rounds() == 2 * n);
    CHECK(legal(g, s));
    const RunReport r = run_schedule(g, s, true);
    CHECK(r.completed);
    CHECK(r.all_visited);
    CHECK(naive_completes(g, s));
  }
  // Round 1 takes the first edge, round 2 the second.
  const Schedule s = oscillation_schedule(5);
  CHECK(std::vector<Edge>(s.matching(0).begin(), s.matching(0).end()) == std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK(std::vector<Edge>(s.matching(1).begin(), s.matching(1).end()) == std::vector<Edge>{{1, 2}, {3, 4}});
}

TEST_CASE("oscillation along a Hamiltonian path of another graph") {
  const Graph g = oracle::cycle(9);
  const std::vector<Vertex> path{3, 4, 5, 6, 7, 8, 0, 1, 2};
  const Schedule s = oscillation_on(path, 9);
  CHECK(legal(g, s));
  CHECK(run_schedule(g, s).completed);
}

TEST_CASE("team size") {
  // ceil(2.5 * ln n / -ln(1-p)), clamped to [2, n].
  auto expected = [](double n, double q) { return std::ceil(2.5 * std::log(n) / -std::log(1.0 - q)); };
  CHECK(team_size(1024, 0.2, TeamMode::direct, 1.0) == static_cast<std::size_t>(expected(1024, 0.2)));
  CHECK(team_size(1024, 0.2, TeamMode::direct, 1.0) == 78);
  CHECK(team_size(100, 0.999999, TeamMode::direct, 1.0) == 2);
  CHECK(team_size(50, 0.01, TeamMode::direct, 1.0) == 50);
  CHECK(team_size(2, 0.5, TeamMode::direct, 1.0) == 2);
  CHECK(team_size(1, 0.5, TeamMode::direct, 1.0) == 1);

  const double n = 2048, p = 0.1, eps = 1.0;
  const double p1 = (1 + eps / 2) * std::log(n) / n;
  const double p2 = (p - p1) / (1 - p1);
  CHECK(team_size(2048, p, TeamMode::strict, eps) == static_cast<std::size_t>(expected(n, p2)));
  CHECK(team_size(2048, p, TeamMode::strict, eps) > team_size(2048, p, TeamMode::direct, eps));
}

TEST_CASE("plan_teams cuts the path into segments") {
  std::vector<Vertex> path(10);
  std::iota(path.begin(), path.end(), 0);
  const TeamPlan plan = plan_teams(path, 4);
  REQUIRE(plan.segments.size() == 3);
  CHECK(plan.segments[0] == std::pair<std::size_t, std::size_t>{0, 4});
  CHECK(plan.segments[2] == std::pair<std::size_t, std::size_t>{8, 10});
  const Schedule s = team_schedule(plan, 10);
  CHECK(s.rounds() == 8);
  CHECK(legal(oracle::path(10), s));
  // A single team covering the path is plain oscillation.
  CHECK(team_schedule(plan_teams(path, 10), 10) == oscillation_schedule(10));
}

TEST_CASE("team strategy on dense random graphs") {
  int completed = 0;
  for (Seed s = 0; s < 20; ++s) {
    const Graph g = gnp_sample(200, 0.3, s);
    const Schedule sched = gnp_team_strategy(g, 0.3, TeamMode::direct, 1.0, s);
    CHECK(sched.rounds() == std::min<std::size_t>(2 * team_size(200, 0.3, TeamMode::direct, 1.0), 400));
    CHECK(legal(g, sched));
    completed += run_schedule(g, sched).completed;
  }
  CHECK(completed >= 19);
  CHECK_THROWS_AS(gnp_team_strategy(oracle::star(4), 0.5, TeamMode::direct, 1.0, 0), NoHamiltonianPath);
}

TEST_CASE("caterpillar strategy") {
  SUBCASE("a path") {
    const CaterpillarTree ct{Tree(oracle::path(6)), Caterpillar{{0, 1, 2, 3, 4, 5}, {}}};
    const Schedule s = caterpillar_strategy(ct);
    CHECK(legal(ct.tree.graph(), s));
    CHECK(naive_completes(ct.tree.graph(), s));
  }
  SUBCASE("a star") {
    const Tree t(oracle::star(6));
    const CaterpillarTree ct{t, *caterpillar_of(t)};
    const Schedule s = caterpillar_strategy(ct);
    CHECK(legal(t.graph(), s));
    CHECK(naive_completes(t.graph(), s));
  }
  SUBCASE("random caterpillars") {
    for (Seed seed = 0; seed < 30; ++seed) {
      const std::size_t n = 10 + seed * 7;
      const CaterpillarTree ct = random_caterpillar(n, std::max<std::size_t>(2, n / (2 + seed % 5)), seed);
      const Schedule s = caterpillar_strategy(ct);
      CHECK(legal(ct.tree.graph(), s));
      const RunReport r = run_schedule(ct.tree.graph(), s);
      CHECK(r.completed);
      CHECK(static_cast<double>(s.rounds()) <= kCaterpillarRoundsPerVertex * static_cast<double>(n));
    }
  }
  SUBCASE("the caterpillar must span the tree") {
    const Tree t(oracle::path(5));
    CHECK_THROWS_AS(caterpillar_strategy(CaterpillarTree{t, Caterpillar{{0, 1, 2}, {}}}), StrategyError);
  }
}

TEST_CASE("tree strategy") {
  for (std::size_t n : {1u, 2u, 3u}) CHECK(run_schedule(oracle::path(n), tree_strategy(Tree(oracle::path(n)))).completed);
  for (const Graph& g : {oracle::star(7), oracle::binary_tree(31), oracle::path(12)}) {
    const Schedule s = tree_strategy(Tree(g));
    CHECK(legal(g, s));
    CHECK(naive_completes(g, s));
  }
  for (Seed seed = 0; seed < 25; ++seed) {
    const Tree t = random_tree(20 + 9 * seed, seed);
    const Schedule s = tree_strategy(t);
    CHECK(legal(t.graph(), s));
    CHECK(run_schedule(t.graph(), s).completed);
  }
}

TEST_CASE("general graph strategy") {
  for (Seed seed = 0; seed < 10; ++seed) {
    const Graph g = gnp_sample(60, 0.08, seed);
    if (!is_connected(g)) {
      CHECK_THROWS_AS(general_graph_strategy(g), DisconnectedGraph);
      continue;
    }
    const Schedule s = general_graph_strategy(g);
    CHECK(legal(g, s));
    CHECK(run_schedule(g, s).completed);
  }
  CHECK_THROWS_AS(general_graph_strategy(Graph(4, {{0, 1}, {2, 3}})), DisconnectedGraph);
}

TEST_CASE("streaming and materialised schedules agree") {
  const Tree t = random_tree(80, 5);
  Schedule streamed(Model::matching, 80);
  ScheduleSink sink(streamed);
  tree_strategy(t, sink);
  CHECK(streamed == tree_strategy(t));

  Replay replay(t.graph());
  tree_strategy(t, replay);
  CHECK(replay.report().completed);
  CHECK(replay.report().rounds_executed == streamed.rounds());
}
