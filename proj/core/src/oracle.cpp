#include "ttc/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ttc::oracle {

namespace {

void check_window(Timestamp t1, Timestamp t2) {
  if (t1 > t2) throw std::invalid_argument("invalid interval: t1 exceeds t2");
}

bool ready_by(const std::optional<Timestamp>& ready, Timestamp t) { return ready && *ready <= t; }

}  // namespace

ContactSet::ContactSet(TtcConfig config, std::vector<Contact> contacts)
    : config_(config), contacts_(std::move(contacts)) {
  for (const Contact& c : contacts_) {
    if (c.from == c.to) throw std::invalid_argument("contact endpoints must differ");
    if (c.from >= config_.vertex_count || c.to >= config_.vertex_count) {
      throw std::invalid_argument("contact vertex out of range");
    }
  }
  std::sort(contacts_.begin(), contacts_.end(),
            [](const Contact& a, const Contact& b) { return a.time < b.time; });
}

bool ContactSet::contains(const Contact& c) const {
  return std::find(contacts_.begin(), contacts_.end(), c) != contacts_.end();
}

std::vector<std::optional<Timestamp>> earliest_arrivals(const ContactSet& cs, VertexId source,
                                                        Timestamp from, bool exact_departure) {
  const Timestamp delta = cs.latency();
  std::vector<std::optional<Timestamp>> ready(cs.vertex_count());
  if (!exact_departure) ready[source] = from;

  const auto& contacts = cs.contacts();
  std::size_t group_begin = 0;
  while (group_begin < contacts.size()) {
    const Timestamp t = contacts[group_begin].time;
    std::size_t group_end = group_begin;
    while (group_end < contacts.size() && contacts[group_end].time == t) ++group_end;

    if (t >= from) {
      // With zero latency, contacts sharing a timestamp can chain in any
      // order, so relax the group to a fixpoint.
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t i = group_begin; i < group_end; ++i) {
          const Contact& c = contacts[i];
          const bool seed = exact_departure && c.from == source && t == from;
          if (!seed && !ready_by(ready[c.from], t)) continue;
          const Timestamp arrival = t + delta;
          if (!ready[c.to] || arrival < *ready[c.to]) {
            ready[c.to] = arrival;
            changed = true;
          }
        }
      }
    }
    group_begin = group_end;
  }
  return ready;
}

bool oracle_reach(const ContactSet& cs, VertexId u, VertexId v, Timestamp t1, Timestamp t2) {
  check_window(t1, t2);
  if (u == v) return true;
  return oracle_min_arrival(cs, u, v, t1, t2).has_value();
}

std::optional<Timestamp> oracle_min_arrival(const ContactSet& cs, VertexId u, VertexId v,
                                            Timestamp t1, Timestamp t2) {
  check_window(t1, t2);
  if (u == v) throw std::invalid_argument("oracle_min_arrival needs distinct endpoints");
  const auto ready = earliest_arrivals(cs, u, t1, false);
  if (ready_by(ready[v], t2)) return ready[v];
  return std::nullopt;
}

std::optional<Timestamp> oracle_max_departure_at_arrival(const ContactSet& cs, VertexId u,
                                                         VertexId v, Timestamp t1, Timestamp t2,
                                                         Timestamp arrival) {
  check_window(t1, t2);
  if (u == v) throw std::invalid_argument("oracle_max_departure_at_arrival needs distinct endpoints");
  if (arrival > t2 || arrival < t1) return std::nullopt;
  const Timestamp delta = cs.latency();

  std::set<Timestamp, std::greater<>> departures;
  for (const Contact& c : cs.contacts()) {
    if (c.from == u && c.time >= t1 && c.time + delta <= arrival) departures.insert(c.time);
  }
  for (Timestamp d : departures) {
    const auto ready = earliest_arrivals(cs, u, d, true);
    for (const Contact& c : cs.contacts()) {
      if (c.to != v || c.time + delta != arrival) continue;
      const bool seed = c.from == u && c.time == d;
      if (seed || ready_by(ready[c.from], c.time)) return d;
    }
  }
  return std::nullopt;
}

RepresentativeMap oracle_representative_tuples(const ContactSet& cs) {
  const std::size_t n = cs.vertex_count();
  const Timestamp delta = cs.latency();
  RepresentativeMap result;

  for (VertexId u = 0; u < n; ++u) {
    std::set<Timestamp> departures;
    for (const Contact& c : cs.contacts()) {
      if (c.from == u) departures.insert(c.time);
    }

    std::vector<std::vector<TimeInterval>> candidates(n);
    for (Timestamp d : departures) {
      const auto ready = earliest_arrivals(cs, u, d, true);
      for (VertexId v = 0; v < n; ++v) {
        if (v != u && ready[v]) candidates[v].push_back({d, *ready[v]});
      }
    }

    for (VertexId v = 0; v < n; ++v) {
      const auto& cands = candidates[v];
      std::vector<TreeEntry> minimal;
      for (const TimeInterval& iv : cands) {
        const bool redundant = std::any_of(cands.begin(), cands.end(), [&](const TimeInterval& o) {
          return o != iv && iv.contains(o);
        });
        if (redundant) continue;

        // Smallest first hop from which v is still reached by iv.end.
        std::optional<VertexId> successor;
        for (const Contact& c : cs.contacts()) {
          if (c.from != u || c.time != iv.start) continue;
          bool witnesses = false;
          if (c.to == v) {
            witnesses = c.time + delta <= iv.end;
          } else {
            const auto onward = earliest_arrivals(cs, c.to, c.time + delta, false);
            witnesses = ready_by(onward[v], iv.end);
          }
          if (witnesses && (!successor || c.to < *successor)) successor = c.to;
        }
        if (!successor) throw std::logic_error("oracle: minimal interval without a first hop");
        minimal.push_back({iv, *successor});
      }
      if (minimal.empty()) continue;
      std::sort(minimal.begin(), minimal.end(), [](const TreeEntry& a, const TreeEntry& b) {
        return a.interval.start < b.interval.start;
      });
      result.emplace(PairKey{u, v}, std::move(minimal));
    }
  }
  return result;
}

}  // namespace ttc::oracle
