#ifndef TTC_VERIFY_HPP
#define TTC_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include "ttc/contact_io.hpp"
#include "ttc/oracle.hpp"
#include "ttc/timed_transitive_closure.hpp"

namespace ttc::io {

struct VerifyOptions {
  std::uint64_t seed = 42;
  // Random (u, v, t1, t2) samples when the exhaustive grid is too large.
  std::size_t trials = 20000;
  // Largest vertex count the oracle is allowed to run on.
  std::size_t cap = 8;
  // Exhaustive grid is used when n^2 * |times|^2 / 2 stays below this.
  std::size_t exhaustive_limit = 500000;
};

struct VerifyReport {
  bool ok = true;
  bool exhaustive = true;
  std::size_t checks = 0;
  std::string mismatch;  // first mismatch, empty when ok

  // "OK (N checks)" or "MISMATCH: ..."
  [[nodiscard]] std::string summary() const;
};

// Compares `closure` with the brute-force oracle over `contacts`: stored tuple
// sets per pair, can_reach over a grid of windows, and foremost/fastest
// properties of reconstructed journeys. Stops at the first mismatch. Throws
// std::invalid_argument when the instance has more than options.cap vertices
// or the two sides disagree on n or latency. `labels`, when given, is used to
// print the witnessing query.
[[nodiscard]] VerifyReport verify_against_oracle(const TimedTransitiveClosure& closure,
                                                 const oracle::ContactSet& contacts,
                                                 const VerifyOptions& options,
                                                 const LabelTable* labels = nullptr);

}  // namespace ttc::io

#endif  // TTC_VERIFY_HPP
