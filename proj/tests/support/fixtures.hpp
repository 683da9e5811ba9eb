#ifndef TTC_TESTS_FIXTURES_HPP
#define TTC_TESTS_FIXTURES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ttc/interval_tree.hpp"
#include "ttc/oracle.hpp"
#include "ttc/timed_transitive_closure.hpp"
#include "ttc/types.hpp"

namespace ttc::testing {

// Vertex ids for the four-vertex example graph.
inline constexpr VertexId kA = 0;
inline constexpr VertexId kB = 1;
inline constexpr VertexId kC = 2;
inline constexpr VertexId kD = 3;

inline std::vector<Contact> diamond_contacts() {
  return {{kA, kB, 2}, {kB, kD, 4}, {kB, kD, 1}, {kA, kC, 4}, {kC, kA, 4}, {kC, kD, 5}};
}

struct ExpectedTuple {
  VertexId from;
  VertexId to;
  TimeInterval interval;
  VertexId successor;
};

// Closure of diamond_contacts() with latency 1, row-major then by start.
inline std::vector<ExpectedTuple> diamond_tuples() {
  return {
      {kA, kB, {2, 3}, kB}, {kA, kC, {4, 5}, kC}, {kA, kD, {2, 5}, kB}, {kA, kD, {4, 6}, kC},
      {kB, kD, {1, 2}, kD}, {kB, kD, {4, 5}, kD}, {kC, kA, {4, 5}, kA}, {kC, kD, {5, 6}, kD},
  };
}

inline std::vector<ExpectedTuple> all_tuples(const TimedTransitiveClosure& ttc) {
  std::vector<ExpectedTuple> out;
  const auto n = static_cast<VertexId>(ttc.vertex_count());
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      ttc.tree(u, v).for_each(
          [&](const TreeEntry& e) { out.push_back({u, v, e.interval, e.successor}); });
    }
  }
  return out;
}

inline bool operator==(const ExpectedTuple& a, const ExpectedTuple& b) {
  return a.from == b.from && a.to == b.to && a.interval == b.interval && a.successor == b.successor;
}

// Interval sets only, per ordered pair (successors may legitimately differ).
inline std::vector<std::vector<TimeInterval>> interval_sets(const TimedTransitiveClosure& ttc) {
  const auto n = static_cast<VertexId>(ttc.vertex_count());
  std::vector<std::vector<TimeInterval>> out(static_cast<std::size_t>(n) * n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      ttc.tree(u, v).for_each(
          [&](const TreeEntry& e) { out[static_cast<std::size_t>(u) * n + v].push_back(e.interval); });
    }
  }
  return out;
}

inline TimedTransitiveClosure build(const TtcConfig& config, const std::vector<Contact>& contacts) {
  TimedTransitiveClosure ttc(config);
  for (const Contact& c : contacts) ttc.add_contact(c);
  return ttc;
}

// Random instance: each possible contact with t in [1, tau] kept with
// probability p. Order is shuffled.
struct Instance {
  TtcConfig config;
  std::vector<Contact> contacts;
  Timestamp tau = 1;
};

inline Instance random_instance(std::mt19937_64& rng, std::size_t n, Timestamp tau, double p,
                                Timestamp latency) {
  Instance inst{{n, latency}, {}, tau};
  std::bernoulli_distribution keep(p);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u == v) continue;
      for (Timestamp t = 1; t <= tau; ++t) {
        if (keep(rng)) inst.contacts.push_back({u, v, t});
      }
    }
  }
  std::shuffle(inst.contacts.begin(), inst.contacts.end(), rng);
  return inst;
}

// Exhaustive journey enumeration: every time-respecting contact sequence of
// length <= max_hops starting at `source`. Returns, per target, the set of
// (departure, arrival) pairs. Independent of both the closure and the
// earliest-arrival oracle.
inline std::vector<std::set<std::pair<Timestamp, Timestamp>>> enumerate_journeys(
    const std::vector<Contact>& contacts, std::size_t n, Timestamp latency, VertexId source,
    std::size_t max_hops) {
  std::vector<std::set<std::pair<Timestamp, Timestamp>>> found(n);
  std::function<void(VertexId, Timestamp, Timestamp, std::size_t)> extend =
      [&](VertexId at, Timestamp departure, Timestamp ready, std::size_t hops) {
        if (hops == max_hops) return;
        for (const Contact& c : contacts) {
          if (c.from != at || c.time < ready) continue;
          const Timestamp arrival = c.time + latency;
          if (c.to != source) found[c.to].insert({departure, arrival});
          extend(c.to, departure, arrival, hops + 1);
        }
      };
  for (const Contact& first : contacts) {
    if (first.from != source) continue;
    const Timestamp arrival = first.time + latency;
    found[first.to].insert({first.time, arrival});
    extend(first.to, first.time, arrival, 1);
  }
  return found;
}

inline bool enumerated_reach(const std::set<std::pair<Timestamp, Timestamp>>& journeys,
                             Timestamp t1, Timestamp t2) {
  return std::any_of(journeys.begin(), journeys.end(),
                     [&](const auto& j) { return j.first >= t1 && j.second <= t2; });
}

}  // namespace ttc::testing

#endif  // TTC_TESTS_FIXTURES_HPP
