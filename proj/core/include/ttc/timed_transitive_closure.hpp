#ifndef TTC_TIMED_TRANSITIVE_CLOSURE_HPP
#define TTC_TIMED_TRANSITIVE_CLOSURE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "ttc/interval_tree.hpp"
#include "ttc/types.hpp"

namespace ttc {

struct TtcConfig {
  std::size_t vertex_count = 0;
  Timestamp latency = 1;
};

/// Incremental temporal reachability index.
///
/// Holds one IntervalTree per ordered vertex pair (u, v). The tree for (u, v)
/// stores exactly the inclusion-minimal intervals [dep, arr] such that some
/// journey leaves u at dep and reaches v at arr, each tagged with the first
/// hop of such a journey. Contacts may be added in any order; the stored
/// content depends only on the set of contacts added.
///
/// Costs: add_contact is O(n^2 log tau) amortized, can_reach O(log tau),
/// is_connected O(n^2 log tau), reconstruct_journey O(k log tau) for a
/// k-contact journey.
///
/// Thread safety: add_contact needs exclusive access; every const member may
/// run concurrently with other const members.
class TimedTransitiveClosure {
 public:
  // Throws std::invalid_argument when vertex_count is 0 or latency exceeds
  // kMaxTimestamp.
  explicit TimedTransitiveClosure(TtcConfig config);

  [[nodiscard]] const TtcConfig& config() const noexcept { return config_; }
  [[nodiscard]] std::size_t vertex_count() const noexcept { return config_.vertex_count; }
  [[nodiscard]] Timestamp latency() const noexcept { return config_.latency; }

  // Throws std::invalid_argument for u == v or time > kMaxTimestamp, and
  // std::out_of_range for unknown vertices. Re-adding a contact is a no-op.
  void add_contact(VertexId u, VertexId v, Timestamp t);
  void add_contact(const Contact& c) { add_contact(c.from, c.to, c.time); }

  // True iff some journey u -> v departs at or after t1 and arrives at or
  // before t2. A vertex always reaches itself. Throws std::invalid_argument
  // when t1 > t2.
  [[nodiscard]] bool can_reach(VertexId u, VertexId v, Timestamp t1, Timestamp t2) const;
  // Over the whole lifetime.
  [[nodiscard]] bool can_reach(VertexId u, VertexId v) const;

  // True iff every ordered pair of distinct vertices is reachable within
  // [t1, t2]. Vacuously true for a single vertex.
  [[nodiscard]] bool is_connected(Timestamp t1, Timestamp t2) const;
  [[nodiscard]] bool is_connected() const;

  // A foremost journey within [t1, t2], and among foremost ones the fastest.
  // std::nullopt when v is unreachable in that window. Throws
  // std::invalid_argument for u == v or t1 > t2.
  [[nodiscard]] std::optional<Journey> reconstruct_journey(VertexId u, VertexId v, Timestamp t1,
                                                           Timestamp t2) const;
  [[nodiscard]] std::optional<Journey> reconstruct_journey(VertexId u, VertexId v) const;

  // Vertices with a non-empty tree in row u (out) or column u (in); O(n).
  [[nodiscard]] std::vector<VertexId> out_star(VertexId u) const;
  [[nodiscard]] std::vector<VertexId> in_star(VertexId u) const;

  // Tree for the ordered pair (u, v). The diagonal exists but is always empty.
  [[nodiscard]] const IntervalTree& tree(VertexId u, VertexId v) const;

  // Total number of stored entries over all pairs.
  [[nodiscard]] std::size_t entry_count() const noexcept;

  // Structural check of every tree plus an empty diagonal.
  [[nodiscard]] bool check_invariants() const;

  friend bool operator==(const TimedTransitiveClosure& a, const TimedTransitiveClosure& b);

 private:
  [[nodiscard]] std::size_t index(VertexId u, VertexId v) const noexcept {
    return static_cast<std::size_t>(u) * config_.vertex_count + v;
  }
  IntervalTree& cell(VertexId u, VertexId v) noexcept { return trees_[index(u, v)]; }
  [[nodiscard]] const IntervalTree& cell(VertexId u, VertexId v) const noexcept {
    return trees_[index(u, v)];
  }
  void check_vertex(VertexId u) const;

  TtcConfig config_;
  std::vector<IntervalTree> trees_;
};

}  // namespace ttc

#endif  // TTC_TIMED_TRANSITIVE_CLOSURE_HPP
