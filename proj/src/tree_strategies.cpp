#include <algorithm>
#include <numeric>

#include "acq/strategies.hpp"

namespace acq {

namespace {

// Agent positions only; enough to plan routes without tracking acquaintance.
class Positions {
 public:
  explicit Positions(std::size_t n) : agent_at_(n), vertex_of_(n) {
    std::iota(agent_at_.begin(), agent_at_.end(), 0);
    std::iota(vertex_of_.begin(), vertex_of_.end(), 0);
  }
  Vertex vertex_of(Agent a) const { return vertex_of_[a]; }
  Agent agent_at(Vertex v) const { return agent_at_[v]; }

  void apply(std::span<const Edge> m) {
    for (const Edge& e : m) {
      std::swap(agent_at_[e.u], agent_at_[e.v]);
      vertex_of_[agent_at_[e.u]] = e.u;
      vertex_of_[agent_at_[e.v]] = e.v;
    }
  }
  void apply(const Schedule& s) {
    for (std::size_t r = 0; r < s.rounds(); ++r) apply(s.matching(r));
  }

 private:
  std::vector<Agent> agent_at_;
  std::vector<Vertex> vertex_of_;
};

void emit_all(const Schedule& s, RoundSink& out) {
  for (std::size_t r = 0; r < s.rounds(); ++r) out.emit(s.matching(r));
}

// Targets for a team on `from`: the team's vertices already inside `region`,
// topped up with the earliest free region vertices.
std::vector<Vertex> targets_within(std::span<const Vertex> from, std::span<const Vertex> region,
                                   std::vector<char>& scratch) {
  std::vector<Vertex> out;
  out.reserve(from.size());
  for (Vertex v : region) scratch[v] = 1;
  for (Vertex v : from) {
    if (scratch[v] == 1) {
      out.push_back(v);
      scratch[v] = 2;
    }
  }
  for (Vertex v : region) {
    if (out.size() == from.size()) break;
    if (scratch[v] == 1) {
      out.push_back(v);
      scratch[v] = 2;
    }
  }
  for (Vertex v : region) scratch[v] = 0;
  return out;
}

// Caterpillar tree relabelled to 0..k-1 in Caterpillar::vertices() order.
struct LocalCaterpillar {
  CaterpillarTree local;
  std::vector<Vertex> to_host;
};

LocalCaterpillar extract(const Caterpillar& c, std::size_t host_n) {
  LocalCaterpillar out;
  out.to_host = c.vertices();
  std::vector<Vertex> to_local(host_n, UINT32_MAX);
  for (Vertex i = 0; i < out.to_host.size(); ++i) to_local[out.to_host[i]] = i;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < c.spine.size(); ++i) {
    out.local.shape.spine.push_back(to_local[c.spine[i]]);
    if (i > 0) edges.push_back(Edge::of(to_local[c.spine[i - 1]], to_local[c.spine[i]]));
  }
  for (const auto& [leg, anchor] : c.legs) {
    out.local.shape.legs.emplace_back(to_local[leg], to_local[anchor]);
    edges.push_back(Edge::of(to_local[leg], to_local[anchor]));
  }
  out.local.tree = Tree(Graph(out.to_host.size(), std::move(edges)));
  return out;
}

}  // namespace

void caterpillar_strategy(const CaterpillarTree& c, RoundSink& out) {
  const Tree& t = c.tree;
  const std::size_t n = t.n();
  if (c.shape.size() != n || !is_caterpillar_in(t, c.shape)) {
    throw StrategyError("caterpillar does not span its tree");
  }
  const auto& spine = c.shape.spine;
  const std::size_t team = spine.size();
  const Schedule walk = oscillation_on(spine, n);

  // Agents in spine-then-legs order of their starting vertices, cut into
  // teams of spine length.
  const std::vector<Vertex> order = c.shape.vertices();
  Positions pos(n);
  std::vector<char> scratch(n, 0);
  for (std::size_t b = 0; b < n; b += team) {
    std::vector<Vertex> from;
    for (std::size_t i = b; i < std::min(n, b + team); ++i) from.push_back(pos.vertex_of(order[i]));
    RouteRequest req{&t, from, targets_within(from, spine, scratch)};
    Schedule route = tree_route(req);
    pos.apply(route);
    emit_all(route, out);
    pos.apply(walk);
    emit_all(walk, out);
  }
}

Schedule caterpillar_strategy(const CaterpillarTree& c) {
  Schedule s(Model::matching, c.tree.n());
  ScheduleSink sink(s);
  caterpillar_strategy(c, sink);
  return s;
}

void tree_strategy(const Tree& t, RoundSink& out) {
  const std::size_t n = t.n();
  if (n <= 1) return;
  const Caterpillar cat = largest_caterpillar(t);
  const std::vector<Vertex> region = cat.vertices();
  const std::size_t k = region.size();
  const std::size_t team = std::max<std::size_t>(1, k / 2);

  // The caterpillar's own schedule depends only on its shape, so it is built
  // once and replayed, in host labels, for every pair of teams.
  const LocalCaterpillar lc = extract(cat, n);
  Schedule meet(Model::matching, n);
  {
    Schedule local = caterpillar_strategy(lc.local);
    meet.append_mapped(local, lc.to_host);
  }

  // Agents starting on the caterpillar come first, then the rest in BFS order.
  std::vector<Agent> agents(region.begin(), region.end());
  {
    std::vector<char> in_region(n, 0);
    for (Vertex v : region) in_region[v] = 1;
    RootedTree rt(t, cat.spine.front());
    for (Vertex v : rt.order)
      if (!in_region[v]) agents.push_back(v);
  }
  const std::size_t teams = (n + team - 1) / team;
  auto members = [&](std::size_t i) {
    return std::span<const Agent>(agents).subspan(i * team, std::min(team, n - i * team));
  };

  Positions pos(n);
  std::vector<char> scratch(n, 0);
  // (0,1), (0,2), ..., (1,2), ...: consecutive pairs share a team that is
  // already on the caterpillar.
  for (std::size_t a = 0; a < teams; ++a) {
    for (std::size_t b = a + 1; b < teams; ++b) {
      std::vector<Vertex> from;
      for (Agent x : members(a)) from.push_back(pos.vertex_of(x));
      for (Agent x : members(b)) from.push_back(pos.vertex_of(x));
      RouteRequest req{&t, from, targets_within(from, region, scratch)};
      Schedule route = tree_route(req);
      pos.apply(route);
      emit_all(route, out);
      pos.apply(meet);
      emit_all(meet, out);
    }
  }
}

Schedule tree_strategy(const Tree& t) {
  Schedule s(Model::matching, t.n());
  ScheduleSink sink(s);
  tree_strategy(t, sink);
  return s;
}

void general_graph_strategy(const Graph& g, RoundSink& out) {
  tree_strategy(spanning_tree(g), out);
}

Schedule general_graph_strategy(const Graph& g) {
  Schedule s(Model::matching, g.n());
  ScheduleSink sink(s);
  general_graph_strategy(g, sink);
  return s;
}

}  // namespace acq
