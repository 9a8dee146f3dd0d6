#include <algorithm>

#include "acq/graph.hpp"

namespace acq {

namespace {

// One restart of rotation-extension. Returns true when path covers V.
bool posa_attempt(const Graph& g, Rng& rng, std::size_t rotation_budget,
                  std::vector<Vertex>& path, std::vector<std::uint32_t>& pos) {
  constexpr std::uint32_t kAbsent = UINT32_MAX;
  const std::size_t n = g.n();
  std::fill(pos.begin(), pos.end(), kAbsent);
  path.clear();
  Vertex start = static_cast<Vertex>(rng.below(n));
  path.push_back(start);
  pos[start] = 0;

  std::vector<Vertex> candidates;
  std::size_t rotations = 0;
  while (path.size() < n) {
    const Vertex end = path.back();
    auto nb = g.neighbors(end);

    candidates.clear();
    for (Vertex w : nb)
      if (pos[w] == kAbsent) candidates.push_back(w);
    if (!candidates.empty()) {
      Vertex next = candidates[rng.below(candidates.size())];
      pos[next] = static_cast<std::uint32_t>(path.size());
      path.push_back(next);
      continue;
    }

    if (rotations++ >= rotation_budget) return false;
    // Rotation pivots: on-path neighbours other than the predecessor.
    candidates.clear();
    for (Vertex w : nb)
      if (pos[w] + 2 < path.size()) candidates.push_back(w);
    std::size_t from = 0;
    if (!candidates.empty() && rng.below(8) != 0) {
      from = pos[candidates[rng.below(candidates.size())]] + 1;
    }
    // from == 0 flips the whole path, which swaps the active end.
    std::reverse(path.begin() + static_cast<std::ptrdiff_t>(from), path.end());
    for (std::size_t i = from; i < path.size(); ++i) pos[path[i]] = static_cast<std::uint32_t>(i);
  }
  return true;
}

}  // namespace

std::optional<std::vector<Vertex>> find_hamiltonian_path(const Graph& g, Seed seed,
                                                         HamiltonianBudget budget) {
  const std::size_t n = g.n();
  if (n == 0) return std::vector<Vertex>{};
  if (!is_connected(g)) return std::nullopt;
  Rng rng(seed);
  std::vector<Vertex> path;
  std::vector<std::uint32_t> pos(n);
  for (std::size_t attempt = 0; attempt < budget.restarts; ++attempt) {
    if (posa_attempt(g, rng, budget.rotations_per_vertex * n, path, pos)) return path;
  }
  return std::nullopt;
}

bool is_hamiltonian_path(const Graph& g, std::span<const Vertex> path) {
  if (path.size() != g.n()) return false;
  std::vector<char> seen(g.n(), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    Vertex v = path[i];
    if (v >= g.n() || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !g.has_edge(path[i - 1], v)) return false;
  }
  return true;
}

}  // namespace acq
