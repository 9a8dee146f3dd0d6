// Unlabelled routing of a team on a tree.
//
// Root the tree anywhere and let demand[c] = (team members in subtree(c)) -
// (targets in subtree(c)) for every non-root vertex c. A positive value means
// that many members still have to cross the edge c -> parent(c) upwards, a
// negative one that they have to cross it downwards. Moving a member across
// an edge in its demand direction changes only that edge's demand, by one
// towards zero. As long as some demand is non-zero, following demand edges
// from any member reaches a vertex with no member, so every round can move at
// least one member and the process terminates with the team on the targets.

#include <algorithm>

#include "acq/strategies.hpp"

namespace acq {

namespace {

struct Move {
  Vertex from;
  Vertex to;
  std::int64_t weight;  // |demand| on the edge
  std::uint32_t depth;  // depth of the member's vertex
};

}  // namespace

Schedule tree_route(const RouteRequest& req) {
  if (req.tree == nullptr) throw StrategyError("tree_route needs a tree");
  const Tree& t = *req.tree;
  const std::size_t n = t.n();
  if (req.sources.size() != req.targets.size()) throw SizeMismatch();

  Schedule out(Model::matching, n);
  std::vector<char> member(n, 0);
  std::vector<char> target(n, 0);
  for (Vertex v : req.sources) {
    if (v >= n || member[v]) throw StrategyError("sources must be distinct vertices");
    member[v] = 1;
  }
  for (Vertex v : req.targets) {
    if (v >= n || target[v]) throw StrategyError("targets must be distinct vertices");
    target[v] = 1;
  }
  if (req.sources.empty()) return out;

  RootedTree rt(t, req.targets.front());
  std::vector<std::int64_t> demand(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    Vertex v = rt.order[i];
    demand[v] += member[v] - target[v];
    if (v != rt.root) demand[rt.parent[v]] += demand[v];
  }
  demand[rt.root] = 0;
  std::int64_t remaining = 0;
  for (std::size_t v = 0; v < n; ++v) remaining += std::abs(demand[v]);

  std::vector<Vertex> positions(req.sources.begin(), req.sources.end());
  std::vector<std::uint32_t> slot(n, UINT32_MAX);  // index into positions
  for (std::uint32_t i = 0; i < positions.size(); ++i) slot[positions[i]] = i;

  std::vector<Move> moves;
  std::vector<std::uint32_t> busy(n, 0);
  std::uint32_t epoch = 0;
  while (remaining > 0) {
    moves.clear();
    for (Vertex u : positions) {
      if (u != rt.root && demand[u] > 0 && !member[rt.parent[u]]) {
        moves.push_back({u, rt.parent[u], demand[u], rt.depth[u]});
      }
      for (Vertex c : t.neighbors(u)) {
        if (c == rt.parent[u] && u != rt.root) continue;
        if (demand[c] < 0 && !member[c]) moves.push_back({u, c, -demand[c], rt.depth[u]});
      }
    }
    // Busiest edges first, then deeper members, then smaller ids.
    std::sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
      if (a.weight != b.weight) return a.weight > b.weight;
      if (a.depth != b.depth) return a.depth > b.depth;
      if (a.from != b.from) return a.from < b.from;
      return a.to < b.to;
    });
    ++epoch;
    out.open_round();
    for (const Move& mv : moves) {
      if (busy[mv.from] == epoch || busy[mv.to] == epoch) continue;
      busy[mv.from] = busy[mv.to] = epoch;
      out.push_pair(Edge::of(mv.from, mv.to));
      if (rt.parent[mv.from] == mv.to && mv.from != rt.root) {
        --demand[mv.from];
      } else {
        ++demand[mv.to];
      }
      --remaining;
      member[mv.from] = 0;
      member[mv.to] = 1;
      const std::uint32_t i = slot[mv.from];
      slot[mv.from] = UINT32_MAX;
      slot[mv.to] = i;
      positions[i] = mv.to;
    }
  }
  return out;
}

std::size_t route_reference_bound(const Tree& t, std::span<const Vertex> s, std::span<const Vertex> tgt) {
  if (s.empty()) return 0;
  return max_dist(t, s, tgt) + 2 * (s.size() - 1);
}

}  // namespace acq
