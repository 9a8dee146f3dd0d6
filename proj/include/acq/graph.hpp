#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "acq/rng.hpp"

namespace acq {

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by operations that need a connected graph.
class DisconnectedGraph : public GraphError {
 public:
  DisconnectedGraph() : GraphError("graph is not connected") {}
};

/// Undirected simple graph on vertices 0..n-1.
///
/// Edges are kept in canonical order (u < v, lexicographic) and adjacency in
/// CSR form with ascending neighbour lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Validates and canonicalises. Throws GraphError on self-loops, duplicate
  /// edges or out-of-range endpoints.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build_adjacency();

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
};

/// A connected acyclic Graph. Checked at construction.
class Tree {
 public:
  Tree() = default;
  explicit Tree(Graph g);

  const Graph& graph() const { return g_; }
  std::size_t n() const { return g_.n(); }
  std::span<const Vertex> neighbors(Vertex v) const { return g_.neighbors(v); }

 private:
  Graph g_;
};

/// Caterpillar sub-structure of some tree: a spine path plus legs hanging off
/// spine vertices. Vertex ids are those of the host tree.
struct Caterpillar {
  std::vector<Vertex> spine;
  /// (leg vertex, spine vertex it hangs from)
  std::vector<std::pair<Vertex, Vertex>> legs;

  std::size_t size() const { return spine.size() + legs.size(); }
  /// Spine vertices in order, followed by leg vertices in stored order.
  std::vector<Vertex> vertices() const;
};

/// A tree that is itself a caterpillar, with its spine.
struct CaterpillarTree {
  Tree tree;
  Caterpillar shape;
};

/// True iff c is a caterpillar contained in t: the spine is a non-empty simple
/// path of t, every leg is a t-neighbour of its spine vertex, and no vertex is
/// repeated.
bool is_caterpillar_in(const Tree& t, const Caterpillar& c);

/// Tree rooted at a vertex: BFS order, parents and depths.
struct RootedTree {
  Vertex root = 0;
  std::vector<Vertex> order;   // BFS order from root
  std::vector<Vertex> parent;  // parent[root] == root
  std::vector<std::uint32_t> depth;

  RootedTree(const Tree& t, Vertex root);
};

// --- generation -------------------------------------------------------------

/// G(n,p): each pair {u,v} (lexicographic order) is included independently
/// with probability p.
Graph gnp_sample(std::size_t n, double p, Seed seed);

/// Uniform labelled tree via a random Pruefer sequence.
Tree random_tree(std::size_t n, Seed seed);

/// Caterpillar with a spine path of spine_len vertices and the remaining
/// vertices attached uniformly to spine vertices. Vertex labels are shuffled.
CaterpillarTree random_caterpillar(std::size_t n, std::size_t spine_len, Seed seed);

// --- structure --------------------------------------------------------------

bool is_connected(const Graph& g);

/// Rotation-extension search with random restarts. An empty result means the
/// budget ran out, not that no path exists.
struct HamiltonianBudget {
  std::size_t restarts = 20;
  std::size_t rotations_per_vertex = 50;
};
std::optional<std::vector<Vertex>> find_hamiltonian_path(const Graph& g, Seed seed,
                                                         HamiltonianBudget budget = {});

/// Independent checker: path is a permutation of V(g) with consecutive
/// vertices adjacent.
bool is_hamiltonian_path(const Graph& g, std::span<const Vertex> path);

/// BFS spanning tree from vertex 0, neighbours in ascending order.
Tree spanning_tree(const Graph& g);

/// Caterpillar built by the heavy-subtree recursion rooted at vertex 0: the
/// spine starts at the root and always descends into the largest child
/// subtree (ties to the smallest id); all other children of spine vertices
/// become legs. Always has at least log2(n) vertices.
Caterpillar largest_caterpillar(const Tree& t);

/// Recognises a tree that is a caterpillar and returns a spanning spine, or
/// nothing if some vertex is at distance >= 2 from every longest path.
std::optional<Caterpillar> caterpillar_of(const Tree& t);

/// Largest tree distance between a vertex of s and a vertex of t.
std::size_t max_dist(const Tree& tree, std::span<const Vertex> s, std::span<const Vertex> t);

/// Distances from src to every vertex (tree edges only).
std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex src);

// --- text format ------------------------------------------------------------

/// "n m" header followed by m canonical "u v" lines.
void write_graph(std::ostream& out, const Graph& g);
std::string to_text(const Graph& g);
/// Throws GraphError on malformed input.
Graph read_graph(std::istream& in);

}  // namespace acq
