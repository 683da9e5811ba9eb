#ifndef TTC_ORACLE_HPP
#define TTC_ORACLE_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ttc/interval_tree.hpp"
#include "ttc/timed_transitive_closure.hpp"
#include "ttc/types.hpp"

// Brute-force temporal reachability over a plain contact list. Shares no code
// with TimedTransitiveClosure; it exists to check it on small instances.
namespace ttc::oracle {

// Immutable contact list plus the graph parameters. Duplicate contacts are
// kept as given; they do not change any answer.
class ContactSet {
 public:
  // Throws std::invalid_argument on self-loops or out-of-range vertices.
  ContactSet(TtcConfig config, std::vector<Contact> contacts);

  [[nodiscard]] const TtcConfig& config() const noexcept { return config_; }
  [[nodiscard]] std::size_t vertex_count() const noexcept { return config_.vertex_count; }
  [[nodiscard]] Timestamp latency() const noexcept { return config_.latency; }
  // Sorted by time.
  [[nodiscard]] const std::vector<Contact>& contacts() const noexcept { return contacts_; }
  [[nodiscard]] bool contains(const Contact& c) const;

 private:
  TtcConfig config_;
  std::vector<Contact> contacts_;
};

// Reachability by earliest-arrival sweep over time-sorted contacts.
// oracle_reach(u, u, ...) is true. Throws std::invalid_argument when t1 > t2.
[[nodiscard]] bool oracle_reach(const ContactSet& cs, VertexId u, VertexId v, Timestamp t1,
                                Timestamp t2);

// Earliest arrival at v over journeys u -> v inside [t1, t2].
[[nodiscard]] std::optional<Timestamp> oracle_min_arrival(const ContactSet& cs, VertexId u,
                                                          VertexId v, Timestamp t1, Timestamp t2);

// Latest departure over journeys u -> v inside [t1, t2] arriving exactly at
// `arrival`.
[[nodiscard]] std::optional<Timestamp> oracle_max_departure_at_arrival(const ContactSet& cs,
                                                                       VertexId u, VertexId v,
                                                                       Timestamp t1, Timestamp t2,
                                                                       Timestamp arrival);

// Earliest arrival at every vertex for journeys from `source`. With
// `exact_departure`, the first contact must leave at exactly `from`;
// otherwise at any time >= from. Unreached vertices hold std::nullopt. The
// source's own slot reports its ready time (from, or nullopt in exact mode
// unless a journey returns to it).
[[nodiscard]] std::vector<std::optional<Timestamp>> earliest_arrivals(const ContactSet& cs,
                                                                      VertexId source,
                                                                      Timestamp from,
                                                                      bool exact_departure);

using PairKey = std::pair<VertexId, VertexId>;
using RepresentativeMap = std::map<PairKey, std::vector<TreeEntry>>;

// For every ordered pair, the inclusion-minimal intervals [dep, arr] such that
// a journey departs exactly at dep and arrives exactly at arr, sorted by
// start, each with the smallest successor that witnesses it. Pairs without
// any journey are absent.
[[nodiscard]] RepresentativeMap oracle_representative_tuples(const ContactSet& cs);

}  // namespace ttc::oracle

#endif  // TTC_ORACLE_HPP
