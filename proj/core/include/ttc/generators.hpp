#ifndef TTC_GENERATORS_HPP
#define TTC_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ttc/types.hpp"

namespace ttc::bench {

enum class GeneratorKind { Complete, Random };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Random;
  std::size_t n = 2;
  Timestamp tau = 1;
  double density = 1.0;  // random only
  std::uint64_t seed = 0;

  // Throws std::invalid_argument unless n >= 2, tau >= 1 and 0 < density <= 1.
  void validate() const;
};

// Every contact (u, v, t) with u != v and t in [1, tau], shuffled by `seed`.
[[nodiscard]] std::vector<Contact> gen_complete(std::size_t n, Timestamp tau,
                                                std::uint64_t seed = 0);

// Each possible contact kept independently with probability p in [0, 1],
// shuffled. Deterministic for a given seed.
[[nodiscard]] std::vector<Contact> gen_random(std::size_t n, Timestamp tau, double p,
                                              std::uint64_t seed);

[[nodiscard]] std::vector<Contact> generate(const GeneratorSpec& spec);

}  // namespace ttc::bench

#endif  // TTC_GENERATORS_HPP
