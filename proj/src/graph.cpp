#include "acq/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

namespace acq {

Graph::Graph(std::size_t n) : n_(n) { build_adjacency(); }

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (e.u >= n_ || e.v >= n_) {
      throw GraphError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                       std::to_string(e.v));
    }
    e = Edge::of(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw GraphError("duplicate edge");
  }
  build_adjacency();
}

void Graph::build_adjacency() {
  offsets_.assign(n_ + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adj_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted, so both endpoints' lists come out ascending: u's list
  // receives v in increasing order, and v's list receives u in increasing
  // order because u < v and (u, v) is sorted by u first.
  for (const auto& e : edges_) adj_[fill[e.u]++] = e.v;
  for (const auto& e : edges_) adj_[fill[e.v]++] = e.u;
  for (std::size_t v = 0; v < n_; ++v) {
    std::sort(adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_ || a == b) return false;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

Tree::Tree(Graph g) : g_(std::move(g)) {
  if (g_.n() == 0) throw GraphError("tree must be non-empty");
  if (g_.m() != g_.n() - 1 || !is_connected(g_)) throw GraphError("graph is not a tree");
}

std::vector<Vertex> Caterpillar::vertices() const {
  std::vector<Vertex> out(spine);
  for (const auto& [leg, _] : legs) out.push_back(leg);
  return out;
}

bool is_caterpillar_in(const Tree& t, const Caterpillar& c) {
  if (c.spine.empty()) return false;
  std::vector<char> seen(t.n(), 0);
  auto claim = [&](Vertex v) {
    if (v >= t.n() || seen[v]) return false;
    seen[v] = 1;
    return true;
  };
  for (std::size_t i = 0; i < c.spine.size(); ++i) {
    if (!claim(c.spine[i])) return false;
    if (i > 0 && !t.graph().has_edge(c.spine[i - 1], c.spine[i])) return false;
  }
  std::vector<char> on_spine(t.n(), 0);
  for (Vertex v : c.spine) on_spine[v] = 1;
  for (const auto& [leg, anchor] : c.legs) {
    if (anchor >= t.n() || !on_spine[anchor]) return false;
    if (!claim(leg)) return false;
    if (!t.graph().has_edge(leg, anchor)) return false;
  }
  return true;
}

RootedTree::RootedTree(const Tree& t, Vertex r)
    : root(r), parent(t.n(), r), depth(t.n(), 0) {
  order.reserve(t.n());
  std::vector<char> seen(t.n(), 0);
  order.push_back(r);
  seen[r] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    Vertex v = order[head];
    for (Vertex w : t.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = v;
      depth[w] = depth[v] + 1;
      order.push_back(w);
    }
  }
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::uint32_t d) { return d == UINT32_MAX; });
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex src) {
  std::vector<std::uint32_t> dist(g.n(), UINT32_MAX);
  std::vector<Vertex> queue;
  queue.reserve(g.n());
  dist[src] = 0;
  queue.push_back(src);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] != UINT32_MAX) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

Graph gnp_sample(std::size_t n, double p, Seed seed) {
  std::vector<Edge> edges;
  if (p >= 1.0) {
    edges.reserve(n * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
  }
  const std::uint64_t threshold = bernoulli_threshold(p);
  if (threshold > 0) {
    Rng rng(seed);
    const double expected = p * static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
    edges.reserve(static_cast<std::size_t>(expected * 1.05) + 16);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.next() < threshold) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

Tree random_tree(std::size_t n, Seed seed) {
  if (n == 0) throw GraphError("random_tree needs n >= 1");
  std::vector<Edge> edges;
  if (n == 1) return Tree(Graph(1));
  if (n == 2) return Tree(Graph(2, {{0, 1}}));
  Rng rng(seed);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng.below(n));

  // Linear-time Pruefer decoding.
  std::vector<std::uint32_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  edges.reserve(n - 1);
  Vertex ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (Vertex c : code) {
    edges.push_back(Edge::of(leaf, c));
    if (--degree[c] == 1 && c < ptr) {
      leaf = c;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back(Edge::of(leaf, static_cast<Vertex>(n - 1)));
  return Tree(Graph(n, std::move(edges)));
}

CaterpillarTree random_caterpillar(std::size_t n, std::size_t spine_len, Seed seed) {
  if (n == 0 || spine_len == 0 || spine_len > n) {
    throw GraphError("random_caterpillar needs 1 <= spine_len <= n");
  }
  Rng rng(seed);
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  for (std::size_t i = n - 1; i > 0; --i) std::swap(label[i], label[rng.below(i + 1)]);

  CaterpillarTree out;
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t i = 0; i < spine_len; ++i) {
    out.shape.spine.push_back(label[i]);
    if (i > 0) edges.push_back(Edge::of(label[i - 1], label[i]));
  }
  for (std::size_t i = spine_len; i < n; ++i) {
    Vertex anchor = label[rng.below(spine_len)];
    out.shape.legs.emplace_back(label[i], anchor);
    edges.push_back(Edge::of(label[i], anchor));
  }
  out.tree = Tree(Graph(n, std::move(edges)));
  return out;
}

Tree spanning_tree(const Graph& g) {
  if (g.n() == 0) throw GraphError("spanning_tree of empty graph");
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> queue{0};
  std::vector<Edge> edges;
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      edges.push_back(Edge::of(v, w));
      queue.push_back(w);
    }
  }
  if (queue.size() != g.n()) throw DisconnectedGraph();
  return Tree(Graph(g.n(), std::move(edges)));
}

Caterpillar largest_caterpillar(const Tree& t) {
  RootedTree rt(t, 0);
  const std::size_t n = t.n();
  std::vector<std::uint32_t> size(n, 1);
  for (std::size_t i = n; i-- > 1;) {
    Vertex v = rt.order[i];
    size[rt.parent[v]] += size[v];
  }
  Caterpillar c;
  Vertex v = rt.root;
  for (;;) {
    c.spine.push_back(v);
    // Heaviest child, smallest id on ties (neighbour lists are ascending).
    std::optional<Vertex> heavy;
    for (Vertex w : t.neighbors(v)) {
      if (w == rt.parent[v] && v != rt.root) continue;
      if (!heavy || size[w] > size[*heavy]) heavy = w;
    }
    if (!heavy) break;
    for (Vertex w : t.neighbors(v)) {
      if ((w == rt.parent[v] && v != rt.root) || w == *heavy) continue;
      c.legs.emplace_back(w, v);
    }
    v = *heavy;
  }
  return c;
}

std::optional<Caterpillar> caterpillar_of(const Tree& t) {
  const std::size_t n = t.n();
  Caterpillar c;
  if (n <= 2) {
    for (Vertex v = 0; v < n; ++v) c.spine.push_back(v);
    return c;
  }
  const Graph& g = t.graph();
  std::vector<char> internal(n, 0);
  std::size_t internal_count = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) > 1) {
      internal[v] = 1;
      ++internal_count;
    }
  }
  auto internal_degree = [&](Vertex v) {
    std::size_t d = 0;
    for (Vertex w : g.neighbors(v)) d += internal[w];
    return d;
  };
  // Internal vertices must induce a path.
  Vertex start = 0;
  std::size_t ends = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!internal[v]) continue;
    std::size_t d = internal_degree(v);
    if (d > 2) return std::nullopt;
    if (d <= 1) {
      if (ends++ == 0) start = v;
    }
  }
  std::vector<Vertex> path{start};
  Vertex prev = start;
  Vertex cur = start;
  for (;;) {
    std::optional<Vertex> next;
    for (Vertex w : g.neighbors(cur))
      if (internal[w] && w != prev) next = w;
    if (!next) break;
    prev = cur;
    cur = *next;
    path.push_back(cur);
  }
  if (path.size() != internal_count) return std::nullopt;

  // Extend both ends with one leaf so the spine runs leaf to leaf.
  auto first_leaf = [&](Vertex v, std::optional<Vertex> skip) -> Vertex {
    for (Vertex w : g.neighbors(v))
      if (!internal[w] && w != skip) return w;
    return v;
  };
  Vertex head = first_leaf(path.front(), std::nullopt);
  Vertex tail = first_leaf(path.back(), path.size() == 1 ? std::optional<Vertex>(head)
                                                         : std::nullopt);
  c.spine.push_back(head);
  c.spine.insert(c.spine.end(), path.begin(), path.end());
  c.spine.push_back(tail);
  std::vector<char> on_spine(n, 0);
  for (Vertex v : c.spine) on_spine[v] = 1;
  for (Vertex s : c.spine) {
    for (Vertex w : g.neighbors(s))
      if (!on_spine[w] && !internal[w]) c.legs.emplace_back(w, s);
  }
  return c;
}

std::size_t max_dist(const Tree& tree, std::span<const Vertex> s, std::span<const Vertex> t) {
  if (s.empty() || t.empty()) throw GraphError("max_dist needs non-empty sets");
  std::size_t best = 0;
  // BFS from the smaller side.
  auto from = s.size() <= t.size() ? s : t;
  auto to = s.size() <= t.size() ? t : s;
  for (Vertex a : from) {
    auto dist = bfs_distances(tree.graph(), a);
    for (Vertex b : to) best = std::max<std::size_t>(best, dist[b]);
  }
  return best;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_text(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

Graph read_graph(std::istream& in) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw GraphError("bad graph header");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v)) throw GraphError("truncated edge list");
    if (u < 0 || v < 0 || u >= n || v >= n) throw GraphError("edge endpoint out of range");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  std::string rest;
  if (in >> rest) throw GraphError("trailing data after edge list");
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

}  // namespace acq
