#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "acq/graph.hpp"
#include "acq/process.hpp"

namespace acq {

class StrategyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoHamiltonianPath : public StrategyError {
 public:
  NoHamiltonianPath() : StrategyError("no Hamiltonian path found within budget") {}
};

class SizeMismatch : public StrategyError {
 public:
  SizeMismatch() : StrategyError("source and target sets differ in size") {}
};

/// Round budgets fixed by the calibration run in tools/calibrate.sh (largest
/// observed ratio times 1.5); see config/calibration.json.
inline constexpr double kCaterpillarRoundsPerVertex = 4.59375;  // C_cat: rounds <= C_cat * n
inline constexpr double kTreeRoundsConstant = 1.42563;  // C_tree: rounds <= C_tree * n^2 / log2 n

/// Odd/even edge alternation on the path v0..v(n-1): round 1 swaps edges
/// (0,1),(2,3),..., round 2 swaps (1,2),(3,4),..., for 2n rounds. Every agent
/// walks the whole path, so all pairs meet.
Schedule oscillation_schedule(std::size_t n);

/// The same rounds laid onto path (vertex ids of a graph with n_total vertices).
Schedule oscillation_on(std::span<const Vertex> path, std::size_t n_total);

enum class TeamMode { direct, strict };

struct TeamPlan {
  std::size_t k = 0;
  std::vector<Vertex> path;
  /// [begin, end) index ranges into path; all of length k except maybe the last.
  std::vector<std::pair<std::size_t, std::size_t>> segments;
};

/// Team size used by gnp_team_strategy: ceil(2.5 log_{1/(1-q)} n) clamped to
/// [2, n], with q = p (direct) or the second-exposure probability (strict).
std::size_t team_size(std::size_t n, double p, TeamMode mode, double eps);

TeamPlan plan_teams(std::vector<Vertex> path, std::size_t k);

/// Splits a Hamiltonian path into teams of k and runs the oscillation on every
/// segment at once. Throws NoHamiltonianPath when the finder gives up.
Schedule gnp_team_strategy(const Graph& g, double p, TeamMode mode, double eps, Seed seed);
/// Same, on a known plan.
Schedule team_schedule(const TeamPlan& plan, std::size_t n_total);

struct RouteRequest {
  const Tree* tree = nullptr;
  std::vector<Vertex> sources;
  std::vector<Vertex> targets;
};

/// Moves the team sitting on sources onto targets (as a set) with matchings of
/// tree edges. Bystanders may end up anywhere. Throws SizeMismatch.
Schedule tree_route(const RouteRequest& req);

/// Reference length from the routing claim: ell + 2(k - 1).
std::size_t route_reference_bound(const Tree& t, std::span<const Vertex> s, std::span<const Vertex> tgt);

/// Teams of spine length are routed onto the spine in turn and walk it.
Schedule caterpillar_strategy(const CaterpillarTree& c);
void caterpillar_strategy(const CaterpillarTree& c, RoundSink& out);

/// Acquaints every pair of agents on a tree via its caterpillar: agents are cut
/// into teams of at most half the caterpillar, and for each pair of teams both
/// are routed onto the caterpillar, which then runs caterpillar_strategy.
Schedule tree_strategy(const Tree& t);
void tree_strategy(const Tree& t, RoundSink& out);

/// tree_strategy on the BFS spanning tree. Throws DisconnectedGraph.
Schedule general_graph_strategy(const Graph& g);
void general_graph_strategy(const Graph& g, RoundSink& out);

}  // namespace acq
