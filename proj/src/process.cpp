#include "acq/process.hpp"

#include <algorithm>
#include <numeric>

namespace acq {

IllegalMatching::IllegalMatching(Kind k, Edge e)
    : ProcessError(std::string(k == Kind::non_edge ? "matching uses a non-edge " : "matching pairs overlap at ") +
                   std::to_string(e.u) + "-" + std::to_string(e.v)),
      kind(k),
      edge(e) {}

void Schedule::add_matching(std::span<const Edge> m) {
  if (model_ != Model::matching) throw ScheduleMismatch("matching round in a placement schedule");
  open_round();
  for (const Edge& e : m) push_pair(e);
}

void Schedule::add_placement(std::span<const Vertex> pi) {
  if (model_ != Model::placement) throw ScheduleMismatch("placement round in a matching schedule");
  if (pi.size() != n_) throw ScheduleMismatch("placement round has wrong length");
  perms_.insert(perms_.end(), pi.begin(), pi.end());
  ++placement_rounds_;
}

void Schedule::append(const Schedule& other) {
  if (other.model_ != model_ || other.n_ != n_) throw ScheduleMismatch("cannot append schedules of different shape");
  if (model_ == Model::placement) {
    perms_.insert(perms_.end(), other.perms_.begin(), other.perms_.end());
    placement_rounds_ += other.placement_rounds_;
    return;
  }
  const std::size_t base = pairs_.size();
  pairs_.insert(pairs_.end(), other.pairs_.begin(), other.pairs_.end());
  for (std::size_t i = 1; i < other.offsets_.size(); ++i) offsets_.push_back(base + other.offsets_[i]);
}

void Schedule::append_mapped(const Schedule& other, std::span<const Vertex> map) {
  if (other.model_ != Model::matching || model_ != Model::matching) {
    throw ScheduleMismatch("append_mapped supports matching schedules only");
  }
  for (std::size_t r = 0; r < other.rounds(); ++r) {
    open_round();
    for (const Edge& e : other.matching(r)) push_pair(Edge::of(map[e.u], map[e.v]));
  }
}

Schedule Schedule::reversed() const {
  Schedule out(model_, n_);
  for (std::size_t r = rounds(); r-- > 0;) {
    if (model_ == Model::matching) {
      out.add_matching(matching(r));
    } else {
      // Inverse permutation undoes a placement round.
      auto pi = placement(r);
      Placement inv(n_);
      for (Vertex v = 0; v < n_; ++v) inv[pi[v]] = v;
      out.add_placement(inv);
    }
  }
  return out;
}

PairSet::PairSet(std::size_t n)
    : bits_((n * (n > 0 ? n - 1 : 0) / 2 + 63) / 64, 0), total_(n * (n > 0 ? n - 1 : 0) / 2) {}

ProcessState::ProcessState(const Graph& g, bool track_visits)
    : agent_at_(g.n()), vertex_of_(g.n()), acq_(g.n()), stamp_(g.n(), 0) {
  std::iota(agent_at_.begin(), agent_at_.end(), 0);
  std::iota(vertex_of_.begin(), vertex_of_.end(), 0);
  for (const Edge& e : g.edges()) acq_.insert(e.u, e.v);
  if (track_visits) {
    visited_.assign((g.n() * g.n() + 63) / 64, 0);
    for (Agent a = 0; a < g.n(); ++a) mark_visit(a, a);
  }
}

void ProcessState::mark_visit(Agent a, Vertex v) {
  const std::size_t i = static_cast<std::size_t>(a) * n() + v;
  visited_[i >> 6] |= std::uint64_t{1} << (i & 63);
}

bool ProcessState::visited(Agent a, Vertex v) const {
  if (visited_.empty()) return false;
  const std::size_t i = static_cast<std::size_t>(a) * n() + v;
  return (visited_[i >> 6] >> (i & 63)) & 1u;
}

bool ProcessState::all_visited() const {
  if (visited_.empty()) return false;
  const std::size_t bits = n() * n();
  for (std::size_t w = 0; w < bits / 64; ++w)
    if (visited_[w] != UINT64_MAX) return false;
  if (bits % 64) {
    const std::uint64_t mask = (std::uint64_t{1} << (bits % 64)) - 1;
    if ((visited_.back() & mask) != mask) return false;
  }
  return true;
}

void ProcessState::meet_neighbors(const Graph& g, Vertex v) {
  const Agent a = agent_at_[v];
  for (Vertex w : g.neighbors(v)) acq_.insert(a, agent_at_[w]);
}

void ProcessState::apply_matching(const Graph& g, std::span<const Edge> m) {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  for (const Edge& e : m) {
    if (e.u >= n() || e.v >= n() || !g.has_edge(e.u, e.v)) {
      throw IllegalMatching(IllegalMatching::Kind::non_edge, e);
    }
    if (stamp_[e.u] == epoch_ || stamp_[e.v] == epoch_) {
      throw IllegalMatching(IllegalMatching::Kind::overlap, e);
    }
    stamp_[e.u] = stamp_[e.v] = epoch_;
  }
  for (const Edge& e : m) {
    std::swap(agent_at_[e.u], agent_at_[e.v]);
    vertex_of_[agent_at_[e.u]] = e.u;
    vertex_of_[agent_at_[e.v]] = e.v;
  }
  // Only agents that moved can meet anyone new.
  if (!acq_.full()) {
    for (const Edge& e : m) {
      meet_neighbors(g, e.u);
      meet_neighbors(g, e.v);
    }
  }
  if (!visited_.empty()) {
    for (const Edge& e : m) {
      mark_visit(agent_at_[e.u], e.u);
      mark_visit(agent_at_[e.v], e.v);
    }
  }
}

void ProcessState::apply_placement(const Graph& g, std::span<const Vertex> pi) {
  if (pi.size() != n()) throw NotABijection();
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  for (Vertex target : pi) {
    if (target >= n() || stamp_[target] == epoch_) throw NotABijection();
    stamp_[target] = epoch_;
  }
  std::vector<Agent> next(n());
  for (Vertex v = 0; v < n(); ++v) next[pi[v]] = agent_at_[v];
  agent_at_ = std::move(next);
  for (Vertex v = 0; v < n(); ++v) vertex_of_[agent_at_[v]] = v;
  if (!acq_.full()) {
    for (const Edge& e : g.edges()) acq_.insert(agent_at_[e.u], agent_at_[e.v]);
  }
  if (!visited_.empty()) {
    for (Vertex v = 0; v < n(); ++v) mark_visit(agent_at_[v], v);
  }
}

bool ProcessState::consistent(const Graph& g) const {
  for (Vertex v = 0; v < n(); ++v) {
    if (agent_at_[v] >= n() || vertex_of_[agent_at_[v]] != v) return false;
  }
  for (const Edge& e : g.edges()) {
    if (!acq_.contains(agent_at_[e.u], agent_at_[e.v])) return false;
  }
  return true;
}

Replay::Replay(const Graph& g, bool track_visits) : g_(g), state_(g, track_visits) {
  report_.total_pairs = state_.total_pairs();
  report_.acquainted_per_round.push_back(state_.acquainted_pairs());
  if (state_.complete()) report_.completion_round = 0;
}

template <class Apply>
void Replay::step(Apply&& apply) {
  const std::size_t before = state_.acquainted_pairs();
  try {
    apply();
  } catch (ProcessError& err) {
    err.round = report_.rounds_executed + 1;
    throw;
  }
  const std::size_t after = state_.acquainted_pairs();
  // Monotone, and a round adds at most |E| pairs.
  if (after < before || after - before > g_.m()) {
    throw std::logic_error("acquaintance growth invariant violated");
  }
  ++report_.rounds_executed;
  report_.acquainted_per_round.push_back(after);
  if (!report_.completion_round && state_.complete()) report_.completion_round = report_.rounds_executed;
}

void Replay::emit(std::span<const Edge> m) {
  step([&] { state_.apply_matching(g_, m); });
}

void Replay::emit_placement(std::span<const Vertex> pi) {
  step([&] { state_.apply_placement(g_, pi); });
}

RunReport Replay::report() const {
  RunReport r = report_;
  r.completed = state_.complete();
  r.all_visited = state_.all_visited();
  return r;
}

RunReport run_schedule(const Graph& g, const Schedule& sched, bool track_visits) {
  if (sched.n() != g.n()) {
    throw ScheduleMismatch("schedule is for n=" + std::to_string(sched.n()) + " but graph has n=" +
                           std::to_string(g.n()));
  }
  Replay replay(g, track_visits);
  for (std::size_t r = 0; r < sched.rounds(); ++r) {
    if (sched.model() == Model::matching) {
      replay.emit(sched.matching(r));
    } else {
      replay.emit_placement(sched.placement(r));
    }
  }
  return replay.report();
}

Schedule to_placement_schedule(const Schedule& sched) {
  if (sched.model() == Model::placement) return sched;
  Schedule out(Model::placement, sched.n());
  Placement pi(sched.n());
  for (std::size_t r = 0; r < sched.rounds(); ++r) {
    std::iota(pi.begin(), pi.end(), 0);
    for (const Edge& e : sched.matching(r)) {
      pi[e.u] = e.v;
      pi[e.v] = e.u;
    }
    out.add_placement(pi);
  }
  return out;
}

}  // namespace acq
