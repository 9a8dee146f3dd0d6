#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "acq/graph.hpp"

namespace acq {

using Agent = std::uint32_t;

/// One matching round: vertex-disjoint edges whose occupants swap.
using Matching = std::vector<Edge>;
/// One helicopter round: index v holds the destination of v's occupant.
using Placement = std::vector<Vertex>;

enum class Model { matching, placement };

class ProcessError : public std::runtime_error {
 public:
  explicit ProcessError(const std::string& what) : std::runtime_error(what) {}
  /// Index (1-based) of the offending round when raised during a replay.
  std::optional<std::size_t> round;
};

class IllegalMatching : public ProcessError {
 public:
  enum class Kind { non_edge, overlap };
  IllegalMatching(Kind k, Edge e);
  Kind kind;
  Edge edge;
};

class NotABijection : public ProcessError {
 public:
  NotABijection() : ProcessError("placement is not a bijection") {}
};

class ScheduleMismatch : public ProcessError {
 public:
  using ProcessError::ProcessError;
};

/// Consumer of matching rounds, so long strategies can be replayed or written
/// out without materialising the whole schedule.
class RoundSink {
 public:
  virtual ~RoundSink() = default;
  virtual void emit(std::span<const Edge> m) = 0;
};

/// A sequence of rounds of one model, stored flat.
class Schedule {
 public:
  Schedule() = default;
  Schedule(Model model, std::size_t n) : model_(model), n_(n) {}

  Model model() const { return model_; }
  std::size_t n() const { return n_; }
  std::size_t rounds() const {
    return model_ == Model::matching ? offsets_.size() - 1 : placement_rounds_;
  }
  bool empty() const { return rounds() == 0; }

  // matching model
  void add_matching(std::span<const Edge> m);
  /// Appends an empty round; pairs are then added with push_pair.
  void open_round() { offsets_.push_back(pairs_.size()); }
  void push_pair(Edge e) {
    pairs_.push_back(e);
    ++offsets_.back();
  }
  std::span<const Edge> matching(std::size_t i) const {
    return {pairs_.data() + offsets_[i], pairs_.data() + offsets_[i + 1]};
  }
  std::size_t total_pairs() const { return pairs_.size(); }

  // placement model
  void add_placement(std::span<const Vertex> pi);
  std::span<const Vertex> placement(std::size_t i) const {
    return {perms_.data() + i * n_, n_};
  }

  /// Appends all rounds of other (same model and n).
  void append(const Schedule& other);
  /// Appends the rounds of other with every vertex v replaced by map[v].
  void append_mapped(const Schedule& other, std::span<const Vertex> map);
  /// The same rounds in reverse order; for matchings this undoes the moves.
  Schedule reversed() const;

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  Model model_ = Model::matching;
  std::size_t n_ = 0;
  std::vector<Edge> pairs_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> perms_;
  std::size_t placement_rounds_ = 0;
};

/// Packed strictly-lower-triangular bit matrix over agent pairs with a running
/// count of set entries.
class PairSet {
 public:
  PairSet() = default;
  explicit PairSet(std::size_t n);

  /// Sets {a,b}; returns true if it was newly set. a != b.
  bool insert(Agent a, Agent b) {
    const std::size_t i = index(a, b);
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    std::uint64_t& word = bits_[i >> 6];
    if (word & bit) return false;
    word |= bit;
    ++count_;
    return true;
  }
  bool contains(Agent a, Agent b) const {
    const std::size_t i = index(a, b);
    return (bits_[i >> 6] >> (i & 63)) & 1u;
  }
  std::size_t count() const { return count_; }
  std::size_t capacity() const { return total_; }
  bool full() const { return count_ == total_; }

 private:
  static std::size_t index(Agent a, Agent b) {
    if (a < b) std::swap(a, b);
    return static_cast<std::size_t>(a) * (a - 1) / 2 + b;
  }
  std::vector<std::uint64_t> bits_;
  std::size_t count_ = 0;
  std::size_t total_ = 0;
};

/// Agents on vertices plus the monotone acquaintance relation.
class ProcessState {
 public:
  /// Agent i on vertex i; pairs on edges of g acquainted.
  ProcessState(const Graph& g, bool track_visits = false);

  std::size_t n() const { return agent_at_.size(); }
  Agent agent_at(Vertex v) const { return agent_at_[v]; }
  Vertex vertex_of(Agent a) const { return vertex_of_[a]; }
  std::span<const Agent> occupants() const { return agent_at_; }

  bool acquainted(Agent a, Agent b) const { return acq_.contains(a, b); }
  std::size_t acquainted_pairs() const { return acq_.count(); }
  std::size_t total_pairs() const { return acq_.capacity(); }
  bool complete() const { return acq_.full(); }

  bool tracks_visits() const { return !visited_.empty(); }
  bool visited(Agent a, Vertex v) const;
  bool all_visited() const;

  /// Validates m against g then swaps occupants of each pair. Throws
  /// IllegalMatching (state untouched) on non-edges or shared endpoints.
  void apply_matching(const Graph& g, std::span<const Edge> m);
  /// Agent on v flies to pi[v]. Throws NotABijection (state untouched).
  void apply_placement(const Graph& g, std::span<const Vertex> pi);

  /// Checks the internal invariants; used by tests.
  bool consistent(const Graph& g) const;

 private:
  void meet_neighbors(const Graph& g, Vertex v);
  void mark_visit(Agent a, Vertex v);

  std::vector<Agent> agent_at_;
  std::vector<Vertex> vertex_of_;
  PairSet acq_;
  std::vector<std::uint64_t> visited_;  // agent-major n x n bits
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

struct RunReport {
  std::size_t rounds_executed = 0;
  bool completed = false;
  /// First round index (0 = initial placement) at which all pairs know each other.
  std::optional<std::size_t> completion_round;
  /// Entry i is the acquainted-pair count after round i; entry 0 is initial.
  std::vector<std::size_t> acquainted_per_round;
  std::size_t total_pairs = 0;
  bool all_visited = false;  // meaningful only when visits were tracked
};

/// Appends every emitted round to a Schedule.
class ScheduleSink final : public RoundSink {
 public:
  explicit ScheduleSink(Schedule& s) : s_(s) {}
  void emit(std::span<const Edge> m) override { s_.add_matching(m); }

 private:
  Schedule& s_;
};

/// Incremental replay: applies rounds as they arrive and keeps the report.
class Replay final : public RoundSink {
 public:
  explicit Replay(const Graph& g, bool track_visits = false);

  void emit(std::span<const Edge> m) override;
  void emit_placement(std::span<const Vertex> pi);

  const ProcessState& state() const { return state_; }
  RunReport report() const;

 private:
  template <class Apply>
  void step(Apply&& apply);

  const Graph& g_;
  ProcessState state_;
  RunReport report_;
};

/// Replays sched on g from the initial placement. Round errors are rethrown
/// with their 1-based round index set.
RunReport run_schedule(const Graph& g, const Schedule& sched, bool track_visits = false);

/// The matching schedule rewritten as equivalent helicopter placements.
Schedule to_placement_schedule(const Schedule& sched);

// --- JSON ------------------------------------------------------------------

/// {"model": "matching"|"placement", "n": int, "rounds": [...]}
void write_schedule_json(std::ostream& out, const Schedule& sched);
/// Throws ScheduleMismatch on malformed documents.
Schedule read_schedule_json(std::istream& in);
void write_report_json(std::ostream& out, const RunReport& report);

/// Streams matching rounds straight into the schedule JSON format.
class JsonScheduleWriter final : public RoundSink {
 public:
  JsonScheduleWriter(std::ostream& out, std::size_t n);
  ~JsonScheduleWriter() override;
  void emit(std::span<const Edge> m) override;
  /// Closes the document; called by the destructor if not called before.
  void finish();

 private:
  std::ostream& out_;
  bool first_ = true;
  bool done_ = false;
};

}  // namespace acq
