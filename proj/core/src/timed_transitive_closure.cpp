#include "ttc/timed_transitive_closure.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace ttc {

namespace {

void check_window(Timestamp t1, Timestamp t2) {
  if (t1 > t2) {
    throw std::invalid_argument("invalid interval: t1 (" + std::to_string(t1) +
                                ") exceeds t2 (" + std::to_string(t2) + ")");
  }
}

// A predecessor w of u whose latest journey into u (arriving by the new
// contact's time) departs at `departure` with first hop `successor`.
struct Predecessor {
  VertexId vertex;
  Timestamp departure;
  VertexId successor;
};

}  // namespace

TimedTransitiveClosure::TimedTransitiveClosure(TtcConfig config) : config_(config) {
  if (config_.vertex_count == 0) {
    throw std::invalid_argument("timed transitive closure needs at least one vertex");
  }
  if (config_.vertex_count > std::numeric_limits<VertexId>::max()) {
    throw std::invalid_argument("vertex count exceeds the vertex id range");
  }
  if (config_.latency > kMaxTimestamp) {
    throw std::invalid_argument("latency exceeds the maximum supported timestamp");
  }
  trees_.resize(config_.vertex_count * config_.vertex_count);
}

void TimedTransitiveClosure::check_vertex(VertexId u) const {
  if (u >= config_.vertex_count) {
    throw std::out_of_range("vertex id " + std::to_string(u) + " out of range (n = " +
                            std::to_string(config_.vertex_count) + ")");
  }
}

void TimedTransitiveClosure::add_contact(VertexId u, VertexId v, Timestamp t) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("contact endpoints must differ");
  if (t > kMaxTimestamp) throw std::invalid_argument("timestamp exceeds the supported maximum");

  const std::size_t n = config_.vertex_count;
  const Timestamp arrival = t + config_.latency;

  cell(u, v).insert_minimal({t, arrival}, v);

  // Journeys w- ~> u that arrive by t can be extended with the new contact.
  // Only the latest-departing one matters; any earlier one yields a superset.
  std::vector<Predecessor> extended;
  for (VertexId w = 0; w < n; ++w) {
    if (w == u || w == v) continue;
    const IntervalTree& into_u = cell(w, u);
    if (into_u.empty()) continue;
    if (auto prev = into_u.find_previous(t)) {
      cell(w, v).insert_minimal({prev->interval.start, arrival}, prev->successor);
      extended.push_back({w, prev->interval.start, prev->successor});
    }
  }

  // Journeys v ~> w+ departing at or after the arrival continue both the bare
  // contact and every extended prefix.
  for (VertexId w = 0; w < n; ++w) {
    if (w == v || w == u) continue;
    const IntervalTree& from_v = cell(v, w);
    if (from_v.empty()) continue;
    auto next = from_v.find_next(arrival);
    if (!next) continue;
    const Timestamp end = next->interval.end;
    cell(u, w).insert_minimal({t, end}, v);
    for (const Predecessor& p : extended) {
      if (p.vertex == w) continue;
      cell(p.vertex, w).insert_minimal({p.departure, end}, p.successor);
    }
  }
}

bool TimedTransitiveClosure::can_reach(VertexId u, VertexId v, Timestamp t1, Timestamp t2) const {
  check_vertex(u);
  check_vertex(v);
  check_window(t1, t2);
  if (u == v) return true;
  auto next = cell(u, v).find_next(t1);
  return next && next->interval.end <= t2;
}

bool TimedTransitiveClosure::can_reach(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return u == v || !cell(u, v).empty();
}

bool TimedTransitiveClosure::is_connected(Timestamp t1, Timestamp t2) const {
  check_window(t1, t2);
  const std::size_t n = config_.vertex_count;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u != v && !can_reach(u, v, t1, t2)) return false;
    }
  }
  return true;
}

bool TimedTransitiveClosure::is_connected() const {
  const std::size_t n = config_.vertex_count;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u != v && cell(u, v).empty()) return false;
    }
  }
  return true;
}

std::optional<Journey> TimedTransitiveClosure::reconstruct_journey(VertexId u, VertexId v,
                                                                   Timestamp t1,
                                                                   Timestamp t2) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("reconstruct_journey needs distinct endpoints");
  check_window(t1, t2);

  auto first = cell(u, v).find_next(t1);
  if (!first || first->interval.end > t2) return std::nullopt;

  const Timestamp arrival = first->interval.end;
  Journey journey{{}, config_.latency};
  journey.contacts.push_back({u, first->successor, first->interval.start});

  VertexId at = first->successor;
  Timestamp departed = first->interval.start;
  while (at != v) {
    // A minimal witness never revisits a vertex, so it has fewer than n hops.
    if (journey.size() >= config_.vertex_count) {
      throw std::logic_error("journey reconstruction did not terminate");
    }
    auto step = cell(at, v).find_next(departed + config_.latency);
    if (!step || step->interval.end > arrival) {
      throw std::logic_error("journey reconstruction found no continuation");
    }
    journey.contacts.push_back({at, step->successor, step->interval.start});
    departed = step->interval.start;
    at = step->successor;
  }
  return journey;
}

std::optional<Journey> TimedTransitiveClosure::reconstruct_journey(VertexId u, VertexId v) const {
  return reconstruct_journey(u, v, 0, std::numeric_limits<Timestamp>::max());
}

std::vector<VertexId> TimedTransitiveClosure::out_star(VertexId u) const {
  check_vertex(u);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < config_.vertex_count; ++v) {
    if (!cell(u, v).empty()) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> TimedTransitiveClosure::in_star(VertexId u) const {
  check_vertex(u);
  std::vector<VertexId> in;
  for (VertexId w = 0; w < config_.vertex_count; ++w) {
    if (!cell(w, u).empty()) in.push_back(w);
  }
  return in;
}

const IntervalTree& TimedTransitiveClosure::tree(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return cell(u, v);
}

std::size_t TimedTransitiveClosure::entry_count() const noexcept {
  std::size_t total = 0;
  for (const IntervalTree& tree : trees_) total += tree.size();
  return total;
}

bool TimedTransitiveClosure::check_invariants() const {
  for (VertexId u = 0; u < config_.vertex_count; ++u) {
    if (!cell(u, u).empty()) return false;
  }
  for (const IntervalTree& tree : trees_) {
    if (!tree.check_invariants()) return false;
  }
  return true;
}

bool operator==(const TimedTransitiveClosure& a, const TimedTransitiveClosure& b) {
  return a.config_.vertex_count == b.config_.vertex_count &&
         a.config_.latency == b.config_.latency && a.trees_ == b.trees_;
}

}  // namespace ttc
