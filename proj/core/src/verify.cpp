#include "ttc/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ttc::io {

namespace {

class Checker {
 public:
  Checker(const TimedTransitiveClosure& closure, const oracle::ContactSet& contacts,
          const LabelTable* labels)
      : closure_(closure), contacts_(contacts), labels_(labels) {}

  [[nodiscard]] std::string name(VertexId v) const {
    return labels_ != nullptr ? labels_->label(v) : std::to_string(v);
  }

  std::string describe(const char* what, VertexId u, VertexId v, Timestamp t1, Timestamp t2) const {
    std::ostringstream s;
    s << what << ' ' << name(u) << ' ' << name(v) << ' ' << t1 << ' ' << t2;
    return s.str();
  }

  // Empty string when both sides agree on every stored tuple.
  std::string compare_structure(std::size_t& checks) const {
    const auto reps = oracle::oracle_representative_tuples(contacts_);
    const auto n = static_cast<VertexId>(closure_.vertex_count());
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = 0; v < n; ++v) {
        if (u == v) continue;
        ++checks;
        std::vector<TimeInterval> expected;
        if (auto it = reps.find({u, v}); it != reps.end()) {
          for (const TreeEntry& e : it->second) expected.push_back(e.interval);
        }
        std::vector<TimeInterval> actual;
        closure_.tree(u, v).for_each([&](const TreeEntry& e) { actual.push_back(e.interval); });
        if (actual != expected) {
          std::ostringstream s;
          s << "tuples " << name(u) << ' ' << name(v) << ": ttc=" << format(actual)
            << " oracle=" << format(expected);
          return s.str();
        }
      }
    }
    return {};
  }

  // Checks the answer to one window against the oracle's earliest arrival.
  std::string compare_query(VertexId u, VertexId v, Timestamp t1, Timestamp t2,
                            std::optional<Timestamp> earliest, bool check_journey) const {
    const bool expected = earliest && *earliest <= t2;
    const bool actual = closure_.can_reach(u, v, t1, t2);
    if (expected != actual) {
      std::ostringstream s;
      s << describe("can-reach", u, v, t1, t2) << ": ttc=" << std::boolalpha << actual
        << " oracle=" << expected;
      return s.str();
    }
    if (!check_journey) return {};

    const auto journey = closure_.reconstruct_journey(u, v, t1, t2);
    if (journey.has_value() != expected) {
      return describe("reconstruct", u, v, t1, t2) + ": journey presence disagrees with oracle";
    }
    if (!journey) return {};
    if (auto problem = journey_problem(*journey, u, v, t1, t2)) {
      return describe("reconstruct", u, v, t1, t2) + ": " + *problem;
    }
    if (journey->arrival() != *earliest) {
      return describe("reconstruct", u, v, t1, t2) + ": arrival " +
             std::to_string(journey->arrival()) + " is not foremost (" +
             std::to_string(*earliest) + ")";
    }
    const auto latest = oracle::oracle_max_departure_at_arrival(contacts_, u, v, t1, t2, *earliest);
    if (!latest || journey->departure() != *latest) {
      return describe("reconstruct", u, v, t1, t2) + ": departure " +
             std::to_string(journey->departure()) + " is not the latest among foremost journeys";
    }
    return {};
  }

 private:
  static std::string format(const std::vector<TimeInterval>& intervals) {
    std::ostringstream s;
    s << '{';
    for (std::size_t i = 0; i < intervals.size(); ++i) {
      if (i > 0) s << ',';
      s << '[' << intervals[i].start << ',' << intervals[i].end << ']';
    }
    s << '}';
    return s.str();
  }

  std::optional<std::string> journey_problem(const Journey& j, VertexId u, VertexId v,
                                             Timestamp t1, Timestamp t2) const {
    if (j.empty()) return "empty journey";
    if (j.contacts.front().from != u || j.contacts.back().to != v) return "wrong endpoints";
    if (!is_time_respecting(j)) return "not time-respecting";
    if (j.departure() < t1 || j.arrival() > t2) return "outside the query window";
    for (const Contact& c : j.contacts) {
      if (!contacts_.contains(c)) return "uses a contact that was never inserted";
    }
    return std::nullopt;
  }

  const TimedTransitiveClosure& closure_;
  const oracle::ContactSet& contacts_;
  const LabelTable* labels_;
};

}  // namespace

std::string VerifyReport::summary() const {
  if (ok) return "OK (" + std::to_string(checks) + " checks)";
  return "MISMATCH: " + mismatch;
}

VerifyReport verify_against_oracle(const TimedTransitiveClosure& closure,
                                   const oracle::ContactSet& contacts,
                                   const VerifyOptions& options, const LabelTable* labels) {
  const std::size_t n = closure.vertex_count();
  if (n > options.cap) {
    throw std::invalid_argument("instance has " + std::to_string(n) +
                                " vertices, above the verification cap of " +
                                std::to_string(options.cap) +
                                " (oracle cost grows quickly; raise --cap to force)");
  }
  if (contacts.vertex_count() != n || contacts.latency() != closure.latency()) {
    throw std::invalid_argument("closure and contact set disagree on n or latency");
  }

  Checker checker(closure, contacts, labels);
  VerifyReport report;
  if (auto m = checker.compare_structure(report.checks); !m.empty()) {
    report.ok = false;
    report.mismatch = std::move(m);
    return report;
  }

  // Every interesting window boundary lies in [first contact - 1, last arrival + 1].
  Timestamp lo = 0;
  Timestamp hi = 1;
  if (!contacts.contacts().empty()) {
    lo = contacts.contacts().front().time;
    lo = lo > 0 ? lo - 1 : 0;
    hi = contacts.contacts().back().time + contacts.latency() + 1;
  }
  std::vector<Timestamp> grid;
  for (Timestamp t = lo; t <= hi; ++t) grid.push_back(t);

  const std::size_t windows = grid.size() * (grid.size() + 1) / 2;
  report.exhaustive = n * n * windows <= options.exhaustive_limit;
  const auto nv = static_cast<VertexId>(n);

  auto fail = [&report](std::string m) {
    report.ok = false;
    report.mismatch = std::move(m);
  };

  if (report.exhaustive) {
    for (VertexId u = 0; u < nv; ++u) {
      for (Timestamp t1 : grid) {
        const auto earliest = oracle::earliest_arrivals(contacts, u, t1, false);
        for (VertexId v = 0; v < nv; ++v) {
          if (v == u) continue;
          for (Timestamp t2 : grid) {
            if (t2 < t1) continue;
            ++report.checks;
            // The reconstructed journey only depends on t1 once reachable, so
            // check it at the widest window.
            const bool journey = t2 == hi;
            if (auto m = checker.compare_query(u, v, t1, t2, earliest[v], journey); !m.empty()) {
              fail(std::move(m));
              return report;
            }
          }
        }
      }
    }
    return report;
  }

  if (n < 2) return report;
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<VertexId> pick_vertex(0, nv - 1);
  std::uniform_int_distribution<std::size_t> pick_time(0, grid.size() - 1);
  for (std::size_t i = 0; i < options.trials; ++i) {
    const VertexId u = pick_vertex(rng);
    VertexId v = pick_vertex(rng);
    while (v == u) v = pick_vertex(rng);
    Timestamp t1 = grid[pick_time(rng)];
    Timestamp t2 = grid[pick_time(rng)];
    if (t1 > t2) std::swap(t1, t2);
    ++report.checks;
    const auto earliest = oracle::earliest_arrivals(contacts, u, t1, false);
    if (auto m = checker.compare_query(u, v, t1, t2, earliest[v], true); !m.empty()) {
      fail(std::move(m));
      return report;
    }
  }
  return report;
}

}  // namespace ttc::io
