#include <algorithm>
#include <cmath>
#include <numeric>

#include "acq/bounds.hpp"
#include "acq/strategies.hpp"

namespace acq {

namespace {

// Pairs of round `round` (1-based) of the oscillation on path[begin, end).
void oscillation_round(std::span<const Vertex> path, std::size_t begin, std::size_t end,
                       std::size_t round, Schedule& out) {
  // Odd rounds use the 1st, 3rd, ... edges of the segment, even rounds the 2nd, 4th, ...
  for (std::size_t i = begin + (round % 2 == 1 ? 0 : 1); i + 1 < end; i += 2) {
    out.push_pair(Edge::of(path[i], path[i + 1]));
  }
}

}  // namespace

Schedule oscillation_on(std::span<const Vertex> path, std::size_t n_total) {
  Schedule s(Model::matching, n_total);
  for (std::size_t r = 1; r <= 2 * path.size(); ++r) {
    s.open_round();
    oscillation_round(path, 0, path.size(), r, s);
  }
  return s;
}

Schedule oscillation_schedule(std::size_t n) {
  std::vector<Vertex> path(n);
  std::iota(path.begin(), path.end(), 0);
  return oscillation_on(path, n);
}

std::size_t team_size(std::size_t n, double p, TeamMode mode, double eps) {
  if (n <= 2) return n;
  const double nn = static_cast<double>(n);
  const double q = mode == TeamMode::direct ? p : bounds::exposure_split(nn, p, eps).p2;
  const double k = std::ceil(bounds::team_k(nn, q));
  return std::clamp<std::size_t>(static_cast<std::size_t>(k), 2, n);
}

TeamPlan plan_teams(std::vector<Vertex> path, std::size_t k) {
  TeamPlan plan;
  plan.k = std::max<std::size_t>(k, 1);
  for (std::size_t b = 0; b < path.size(); b += plan.k) {
    plan.segments.emplace_back(b, std::min(path.size(), b + plan.k));
  }
  plan.path = std::move(path);
  return plan;
}

Schedule team_schedule(const TeamPlan& plan, std::size_t n_total) {
  Schedule s(Model::matching, n_total);
  // Every segment oscillates for 2k rounds; shorter segments simply keep
  // alternating after their own 2*len rounds.
  for (std::size_t r = 1; r <= 2 * plan.k; ++r) {
    s.open_round();
    for (const auto& [b, e] : plan.segments) oscillation_round(plan.path, b, e, r, s);
  }
  return s;
}

Schedule gnp_team_strategy(const Graph& g, double p, TeamMode mode, double eps, Seed seed) {
  auto path = find_hamiltonian_path(g, seed);
  if (!path) throw NoHamiltonianPath();
  const std::size_t k = team_size(g.n(), p, mode, eps);
  return team_schedule(plan_teams(std::move(*path), k), g.n());
}

}  // namespace acq
