#ifndef TTC_SCALING_HPP
#define TTC_SCALING_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ttc/generators.hpp"
#include "ttc/timed_transitive_closure.hpp"

namespace ttc::bench {

struct ScalingSample {
  std::size_t processed = 0;
  std::uint64_t cumulative_ns = 0;
  std::size_t structure_entries = 0;
};

// Inserts the generated contacts one at a time and records cumulative wall
// time at `checkpoints` evenly spaced points (the last one is always the full
// stream). Runs the structural checks afterwards and throws std::logic_error
// if they fail.
[[nodiscard]] std::vector<ScalingSample> measure_update_scaling(const GeneratorSpec& spec,
                                                                Timestamp latency,
                                                                std::size_t checkpoints);

// Header `m,cumulative_ns,structure_entries`.
void write_scaling_csv(std::ostream& out, const std::vector<ScalingSample>& samples);

// Median over `repeats` builds of the mean add_contact time.
[[nodiscard]] double median_insert_ns(const GeneratorSpec& spec, Timestamp latency, int repeats);

// Median over `repeats` rounds of the mean can_reach time on the built
// closure, using `queries` random (u, v, t1, t2) per round.
[[nodiscard]] double median_can_reach_ns(const GeneratorSpec& spec, Timestamp latency,
                                         std::size_t queries, int repeats);

// Tree invariants plus: every tree holds at most as many entries as there are
// distinct timestamps among `contacts`. Throws std::logic_error otherwise.
void assert_structure(const TimedTransitiveClosure& closure, const std::vector<Contact>& contacts);

}  // namespace ttc::bench

#endif  // TTC_SCALING_HPP
