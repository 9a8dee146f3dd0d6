#include "acq/exact.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_set>

namespace acq::exact {

TooLarge::TooLarge(std::size_t n)
    : std::runtime_error("exact search is capped; graph has n=" + std::to_string(n)) {}

namespace {

using Mask = std::uint32_t;

// Bit index of the unordered pair {a, b} among n items.
struct PairIndex {
  explicit PairIndex(std::size_t n) : n(n), bit(n * n, 0) {
    Mask next = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) bit[a * n + b] = bit[b * n + a] = next++;
    full = next == 32 ? ~Mask{0} : (Mask{1} << next) - 1;
  }
  Mask of(std::size_t a, std::size_t b) const { return Mask{1} << bit[a * n + b]; }
  std::size_t n;
  std::vector<std::uint8_t> bit;
  Mask full = 0;
};

void check_size(const Graph& g, std::size_t max_n) {
  if (g.n() > std::min(max_n, kHardMaxN)) throw TooLarge(g.n());
}

// Distinct images of E(g) under all vertex permutations.
std::vector<Mask> edge_images(const Graph& g, const PairIndex& idx) {
  std::vector<Vertex> pi(g.n());
  std::iota(pi.begin(), pi.end(), 0);
  std::vector<Mask> out;
  do {
    Mask m = 0;
    for (const Edge& e : g.edges()) m |= idx.of(pi[e.u], pi[e.v]);
    out.push_back(m);
  } while (std::next_permutation(pi.begin(), pi.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Mask edge_mask(const Graph& g, const PairIndex& idx) {
  Mask m = 0;
  for (const Edge& e : g.edges()) m |= idx.of(e.u, e.v);
  return m;
}

void collect_matchings(const Graph& g, std::size_t i, std::vector<char>& used, Matching& cur,
                       std::vector<Matching>& out) {
  if (i == g.m()) {
    out.push_back(cur);
    return;
  }
  collect_matchings(g, i + 1, used, cur, out);
  const Edge e = g.edges()[i];
  if (used[e.u] || used[e.v]) return;
  used[e.u] = used[e.v] = 1;
  cur.push_back(e);
  collect_matchings(g, i + 1, used, cur, out);
  cur.pop_back();
  used[e.u] = used[e.v] = 0;
}

// Set cover by iterative deepening: can `depth` more images cover the rest?
class CoverSearch {
 public:
  CoverSearch(std::vector<Mask> images, Mask full, std::size_t edges)
      : images_(std::move(images)), full_(full), per_copy_(edges) {
    for (Mask bit = 0; bit < 32; ++bit) {
      std::vector<Mask> with;
      for (Mask im : images_)
        if (im >> bit & 1u) with.push_back(im);
      by_pair_.push_back(std::move(with));
    }
  }

  std::size_t solve(Mask start) {
    const std::size_t upper = greedy(start);
    for (std::size_t d = 0; d < upper; ++d) {
      failed_.clear();
      if (search(start, d)) return d;
    }
    return upper;
  }

 private:
  std::size_t greedy(Mask covered) const {
    std::size_t used = 0;
    while (covered != full_) {
      Mask best = 0;
      int gain = -1;
      for (Mask im : images_) {
        const int g = std::popcount(im & ~covered);
        if (g > gain) {
          gain = g;
          best = im;
        }
      }
      covered |= best;
      ++used;
    }
    return used;
  }

  bool search(Mask covered, std::size_t depth) {
    if (covered == full_) return true;
    if (depth == 0) return false;
    const Mask open = full_ & ~covered;
    if (static_cast<std::size_t>(std::popcount(open)) > depth * per_copy_) return false;
    const std::uint64_t key = (std::uint64_t{covered} << 8) | depth;
    if (failed_.count(key)) return false;
    for (Mask im : by_pair_[std::countr_zero(open)]) {
      if (search(covered | im, depth - 1)) return true;
    }
    failed_.insert(key);
    return false;
  }

  std::vector<Mask> images_;
  Mask full_;
  std::size_t per_copy_;
  std::vector<std::vector<Mask>> by_pair_;
  std::unordered_set<std::uint64_t> failed_;
};

}  // namespace

std::vector<Matching> all_matchings(const Graph& g) {
  std::vector<Matching> out;
  std::vector<char> used(g.n(), 0);
  Matching cur;
  collect_matchings(g, 0, used, cur, out);
  return out;
}

std::size_t exact_ac(const Graph& g, std::size_t max_n) {
  check_size(g, max_n);
  if (!is_connected(g)) throw DisconnectedGraph();
  const std::size_t n = g.n();
  const PairIndex idx(n);
  const Mask initial = edge_mask(g, idx);
  if (initial == idx.full) return 0;

  std::vector<Matching> matchings = all_matchings(g);
  matchings.erase(matchings.begin());  // the empty matching never changes the state

  // State key: agent on each vertex in 3-bit fields above the acquaintance mask.
  struct State {
    std::vector<Agent> at;
    Mask acq;
  };
  auto key = [](const State& s) {
    std::uint64_t k = 0;
    for (Agent a : s.at) k = (k << 3) | a;
    return (k << 32) | s.acq;
  };

  State start{std::vector<Agent>(n), initial};
  std::iota(start.at.begin(), start.at.end(), 0);
  std::unordered_set<std::uint64_t> seen{key(start)};
  std::vector<State> frontier{start};
  std::vector<State> next;
  for (std::size_t depth = 1; !frontier.empty(); ++depth) {
    next.clear();
    for (const State& s : frontier) {
      for (const Matching& m : matchings) {
        State t = s;
        for (const Edge& e : m) std::swap(t.at[e.u], t.at[e.v]);
        for (const Edge& e : g.edges()) t.acq |= idx.of(t.at[e.u], t.at[e.v]);
        if (t.acq == idx.full) return depth;
        if (seen.insert(key(t)).second) next.push_back(std::move(t));
      }
    }
    frontier.swap(next);
  }
  throw std::logic_error("exact_ac exhausted a connected graph");
}

std::size_t exact_bac(const Graph& g, std::size_t max_n) {
  check_size(g, max_n);
  const PairIndex idx(g.n());
  const Mask initial = edge_mask(g, idx);
  if (initial == idx.full) return 0;
  if (g.m() == 0) throw NoCover();
  CoverSearch search(edge_images(g, idx), idx.full, g.m());
  return search.solve(initial);
}

std::size_t cover_number(const Graph& g, std::size_t max_n) {
  check_size(g, max_n);
  const PairIndex idx(g.n());
  if (idx.full == 0) return 1;
  if (g.m() == 0) throw NoCover();
  const std::vector<Mask> images = edge_images(g, idx);
  std::vector<char> seen(std::size_t{1} << std::popcount(idx.full), 0);
  std::vector<Mask> frontier{0};
  seen[0] = 1;
  for (std::size_t copies = 1;; ++copies) {
    std::vector<Mask> next;
    for (Mask covered : frontier) {
      for (Mask im : images) {
        const Mask c = covered | im;
        if (c == idx.full) return copies;
        if (!seen[c]) {
          seen[c] = 1;
          next.push_back(c);
        }
      }
    }
    frontier.swap(next);
  }
}

PairTrace pair_trace(const Schedule& sched, Agent a, Agent b) {
  const std::size_t n = sched.n();
  if (a >= n || b >= n || a == b) throw std::invalid_argument("pair_trace needs two distinct agents");
  std::vector<Vertex> where(n);
  std::vector<Agent> at(n);
  std::iota(where.begin(), where.end(), 0);
  std::iota(at.begin(), at.end(), 0);
  PairTrace tr{a, b, {}, {}};
  tr.positions.push_back(Edge::of(where[a], where[b]));
  for (std::size_t r = 0; r < sched.rounds(); ++r) {
    if (sched.model() == Model::matching) {
      for (const Edge& e : sched.matching(r)) {
        std::swap(at[e.u], at[e.v]);
        where[at[e.u]] = e.u;
        where[at[e.v]] = e.v;
      }
    } else {
      auto pi = sched.placement(r);
      for (Agent x = 0; x < n; ++x) where[x] = pi[where[x]];
    }
    tr.positions.push_back(Edge::of(where[a], where[b]));
  }
  tr.distinct = tr.positions;
  std::sort(tr.distinct.begin(), tr.distinct.end());
  tr.distinct.erase(std::unique(tr.distinct.begin(), tr.distinct.end()), tr.distinct.end());
  return tr;
}

void for_each_connected_graph(std::size_t n, const std::function<void(const Graph&)>& fn) {
  if (n > kDefaultMaxN) throw TooLarge(n);
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  const std::uint32_t limit = std::uint32_t{1} << pairs.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1u) edges.push_back(pairs[i]);
    Graph g(n, std::move(edges));
    if (is_connected(g)) fn(g);
  }
}

std::vector<Graph> enumerate_connected_graphs(std::size_t n) {
  std::vector<Graph> out;
  for_each_connected_graph(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace acq::exact
