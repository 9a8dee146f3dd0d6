#pragma once

// Exhaustive ground truth for tiny graphs.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "acq/graph.hpp"
#include "acq/process.hpp"

namespace acq::exact {

class TooLarge : public std::runtime_error {
 public:
  explicit TooLarge(std::size_t n);
};

/// No number of copies of an edgeless graph covers K_n for n >= 2.
class NoCover : public std::runtime_error {
 public:
  NoCover() : std::runtime_error("an edgeless graph cannot cover K_n") {}
};

inline constexpr std::size_t kDefaultMaxN = 5;
inline constexpr std::size_t kHardMaxN = 6;

/// Minimum number of matching rounds, by breadth-first search over
/// (placement, acquaintance) states. Throws TooLarge, DisconnectedGraph.
std::size_t exact_ac(const Graph& g, std::size_t max_n = kDefaultMaxN);

/// Minimum number of helicopter rounds: the smallest set of vertex-relabelled
/// copies of E(g) that together with E(g) itself covers all pairs, found by
/// iterative deepening. Throws TooLarge, NoCover.
std::size_t exact_bac(const Graph& g, std::size_t max_n = kDefaultMaxN);

/// Minimum number of copies of g whose edges cover K_n, by breadth-first
/// search over covered-pair sets with no copy forced. Throws TooLarge, NoCover.
std::size_t cover_number(const Graph& g, std::size_t max_n = kDefaultMaxN);

/// All matchings of g, the empty one first.
std::vector<Matching> all_matchings(const Graph& g);

struct PairTrace {
  Agent a = 0;
  Agent b = 0;
  /// Vertex pair the two agents occupy after each round; entry 0 is initial.
  std::vector<Edge> positions;
  /// Distinct elements of positions, sorted.
  std::vector<Edge> distinct;
};

PairTrace pair_trace(const Schedule& sched, Agent a, Agent b);

/// Every labelled connected graph on n <= 5 vertices exactly once, in
/// increasing order of edge bitmask.
void for_each_connected_graph(std::size_t n, const std::function<void(const Graph&)>& fn);
std::vector<Graph> enumerate_connected_graphs(std::size_t n);

}  // namespace acq::exact
