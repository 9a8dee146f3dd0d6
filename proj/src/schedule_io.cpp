#include <istream>
#include <ostream>

#include <json.hpp>

#include "acq/process.hpp"

namespace acq {

using nlohmann::json;

// Written by hand: strategy schedules can run to millions of rounds and a
// json DOM of that size is several times the flat representation.
void write_schedule_json(std::ostream& out, const Schedule& sched) {
  out << "{\"model\":\"" << (sched.model() == Model::matching ? "matching" : "placement")
      << "\",\"n\":" << sched.n() << ",\"rounds\":[";
  for (std::size_t r = 0; r < sched.rounds(); ++r) {
    if (r) out << ',';
    out << '[';
    if (sched.model() == Model::matching) {
      bool first = true;
      for (const Edge& e : sched.matching(r)) {
        if (!first) out << ',';
        first = false;
        out << '[' << e.u << ',' << e.v << ']';
      }
    } else {
      bool first = true;
      for (Vertex v : sched.placement(r)) {
        if (!first) out << ',';
        first = false;
        out << v;
      }
    }
    out << ']';
  }
  out << "]}\n";
}

JsonScheduleWriter::JsonScheduleWriter(std::ostream& out, std::size_t n) : out_(out) {
  out_ << "{\"model\":\"matching\",\"n\":" << n << ",\"rounds\":[";
}

JsonScheduleWriter::~JsonScheduleWriter() { finish(); }

void JsonScheduleWriter::emit(std::span<const Edge> m) {
  if (!first_) out_ << ',';
  first_ = false;
  out_ << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out_ << ',';
    out_ << '[' << m[i].u << ',' << m[i].v << ']';
  }
  out_ << ']';
}

void JsonScheduleWriter::finish() {
  if (done_) return;
  done_ = true;
  out_ << "]}\n";
}

Schedule read_schedule_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ScheduleMismatch(std::string("schedule is not valid JSON: ") + e.what());
  }
  try {
    const std::string model = doc.at("model").get<std::string>();
    const auto n = doc.at("n").get<std::int64_t>();
    if (n < 0) throw ScheduleMismatch("negative n");
    const auto& rounds = doc.at("rounds");
    if (!rounds.is_array()) throw ScheduleMismatch("rounds must be an array");
    if (model == "matching") {
      Schedule s(Model::matching, static_cast<std::size_t>(n));
      for (const auto& round : rounds) {
        if (!round.is_array()) throw ScheduleMismatch("matching round must be an array");
        s.open_round();
        for (const auto& pair : round) {
          if (!pair.is_array() || pair.size() != 2) throw ScheduleMismatch("matching pair must be [u,v]");
          const auto u = pair[0].get<std::int64_t>();
          const auto v = pair[1].get<std::int64_t>();
          if (u < 0 || v < 0) throw ScheduleMismatch("negative vertex id");
          s.push_pair(Edge::of(static_cast<Vertex>(u), static_cast<Vertex>(v)));
        }
      }
      return s;
    }
    if (model == "placement") {
      Schedule s(Model::placement, static_cast<std::size_t>(n));
      Placement pi;
      for (const auto& round : rounds) {
        if (!round.is_array() || round.size() != static_cast<std::size_t>(n)) {
          throw ScheduleMismatch("placement round must have n entries");
        }
        pi.clear();
        for (const auto& v : round) {
          const auto x = v.get<std::int64_t>();
          if (x < 0) throw ScheduleMismatch("negative vertex id");
          pi.push_back(static_cast<Vertex>(x));
        }
        s.add_placement(pi);
      }
      return s;
    }
    throw ScheduleMismatch("unknown model '" + model + "'");
  } catch (const json::exception& e) {
    throw ScheduleMismatch(std::string("malformed schedule: ") + e.what());
  }
}

void write_report_json(std::ostream& out, const RunReport& report) {
  json j;
  j["rounds_executed"] = report.rounds_executed;
  j["completed"] = report.completed;
  j["completion_round"] = report.completion_round ? json(*report.completion_round) : json(nullptr);
  j["acquainted_pairs"] = report.acquainted_per_round.empty() ? 0 : report.acquainted_per_round.back();
  j["total_pairs"] = report.total_pairs;
  j["acquainted_per_round"] = report.acquainted_per_round;
  out << j.dump() << '\n';
}

}  // namespace acq
