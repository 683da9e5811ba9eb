#include "ttc/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ttc::bench {

void GeneratorSpec::validate() const {
  if (n < 2) throw std::invalid_argument("generator needs n >= 2");
  if (tau < 1) throw std::invalid_argument("generator needs tau >= 1");
  if (tau > kMaxTimestamp) throw std::invalid_argument("tau exceeds the supported maximum");
  if (kind == GeneratorKind::Random && !(density > 0.0 && density <= 1.0)) {
    throw std::invalid_argument("density must lie in (0, 1]");
  }
}

std::vector<Contact> gen_random(std::size_t n, Timestamp tau, double p, std::uint64_t seed) {
  if (n < 2 || tau < 1) throw std::invalid_argument("generator needs n >= 2 and tau >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");

  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(p);
  std::vector<Contact> contacts;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u == v) continue;
      for (Timestamp t = 1; t <= tau; ++t) {
        if (p >= 1.0 || keep(rng)) contacts.push_back({u, v, t});
      }
    }
  }
  std::shuffle(contacts.begin(), contacts.end(), rng);
  return contacts;
}

std::vector<Contact> gen_complete(std::size_t n, Timestamp tau, std::uint64_t seed) {
  return gen_random(n, tau, 1.0, seed);
}

std::vector<Contact> generate(const GeneratorSpec& spec) {
  spec.validate();
  if (spec.kind == GeneratorKind::Complete) return gen_complete(spec.n, spec.tau, spec.seed);
  return gen_random(spec.n, spec.tau, spec.density, spec.seed);
}

}  // namespace ttc::bench
