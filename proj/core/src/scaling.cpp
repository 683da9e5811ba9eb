#include "ttc/scaling.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>

namespace ttc::bench {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ns(Clock::time_point since) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - since).count());
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2.0;
}

TimedTransitiveClosure build(const GeneratorSpec& spec, Timestamp latency,
                             const std::vector<Contact>& contacts) {
  TimedTransitiveClosure closure({spec.n, latency});
  for (const Contact& c : contacts) closure.add_contact(c);
  return closure;
}

}  // namespace

void assert_structure(const TimedTransitiveClosure& closure, const std::vector<Contact>& contacts) {
  if (!closure.check_invariants()) throw std::logic_error("closure failed its structural check");
  std::set<Timestamp> distinct;
  for (const Contact& c : contacts) distinct.insert(c.time);
  const auto n = static_cast<VertexId>(closure.vertex_count());
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (closure.tree(u, v).size() > distinct.size()) {
        throw std::logic_error("tree size exceeds the number of distinct timestamps");
      }
    }
  }
}

std::vector<ScalingSample> measure_update_scaling(const GeneratorSpec& spec, Timestamp latency,
                                                  std::size_t checkpoints) {
  const auto contacts = generate(spec);
  checkpoints = std::max<std::size_t>(1, std::min(checkpoints, std::max<std::size_t>(1, contacts.size())));

  TimedTransitiveClosure closure({spec.n, latency});
  std::vector<ScalingSample> samples;
  samples.reserve(checkpoints);
  std::uint64_t total_ns = 0;
  std::size_t next_checkpoint = 1;
  for (std::size_t i = 0; i < contacts.size(); ++i) {
    const auto start = Clock::now();
    closure.add_contact(contacts[i]);
    total_ns += elapsed_ns(start);
    const std::size_t processed = i + 1;
    if (processed * checkpoints >= next_checkpoint * contacts.size()) {
      samples.push_back({processed, total_ns, closure.entry_count()});
      ++next_checkpoint;
    }
  }
  if (contacts.empty()) samples.push_back({0, 0, 0});
  assert_structure(closure, contacts);
  return samples;
}

void write_scaling_csv(std::ostream& out, const std::vector<ScalingSample>& samples) {
  out << "m,cumulative_ns,structure_entries\n";
  for (const ScalingSample& s : samples) {
    out << s.processed << ',' << s.cumulative_ns << ',' << s.structure_entries << '\n';
  }
}

double median_insert_ns(const GeneratorSpec& spec, Timestamp latency, int repeats) {
  const auto contacts = generate(spec);
  if (contacts.empty()) return 0.0;
  std::vector<double> means;
  for (int r = 0; r < std::max(1, repeats); ++r) {
    TimedTransitiveClosure closure({spec.n, latency});
    const auto start = Clock::now();
    for (const Contact& c : contacts) closure.add_contact(c);
    means.push_back(static_cast<double>(elapsed_ns(start)) / static_cast<double>(contacts.size()));
    assert_structure(closure, contacts);
  }
  return median(std::move(means));
}

double median_can_reach_ns(const GeneratorSpec& spec, Timestamp latency, std::size_t queries,
                           int repeats) {
  const auto contacts = generate(spec);
  const TimedTransitiveClosure closure = build(spec, latency, contacts);
  assert_structure(closure, contacts);

  struct Probe {
    VertexId u, v;
    Timestamp t1, t2;
  };
  std::mt19937_64 rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<VertexId> vertex(0, static_cast<VertexId>(spec.n - 1));
  std::uniform_int_distribution<Timestamp> time(1, spec.tau + latency);
  std::vector<Probe> probes;
  probes.reserve(queries);
  for (std::size_t i = 0; i < queries; ++i) {
    Probe p{vertex(rng), vertex(rng), time(rng), time(rng)};
    if (p.t1 > p.t2) std::swap(p.t1, p.t2);
    probes.push_back(p);
  }

  std::vector<double> means;
  std::size_t hits = 0;
  for (int r = 0; r < std::max(1, repeats); ++r) {
    const auto start = Clock::now();
    for (const Probe& p : probes) hits += closure.can_reach(p.u, p.v, p.t1, p.t2) ? 1 : 0;
    means.push_back(static_cast<double>(elapsed_ns(start)) /
                    static_cast<double>(std::max<std::size_t>(1, probes.size())));
  }
  volatile std::size_t sink = hits;
  (void)sink;
  return median(std::move(means));
}

}  // namespace ttc::bench
