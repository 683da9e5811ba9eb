#include "ttc/oracle.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "support/fixtures.hpp"

namespace ttc::oracle {
namespace {

using testing::kA;
using testing::kB;
using testing::kC;
using testing::kD;

ContactSet diamond_set() { return ContactSet({4, 1}, testing::diamond_contacts()); }

TEST(OracleTest, RejectsMalformedContacts) {
  EXPECT_THROW(ContactSet({3, 1}, {{1, 1, 2}}), std::invalid_argument);
  EXPECT_THROW(ContactSet({3, 1}, {{0, 3, 2}}), std::invalid_argument);
}

TEST(OracleTest, ReachOnDiamond) {
  const auto cs = diamond_set();
  EXPECT_TRUE(oracle_reach(cs, kA, kD, 2, 5));
  EXPECT_FALSE(oracle_reach(cs, kA, kD, 3, 5));
  EXPECT_TRUE(oracle_reach(cs, kA, kA, 7, 9));
  EXPECT_FALSE(oracle_reach(cs, kB, kA, 0, 100));
  EXPECT_THROW((void)oracle_reach(cs, kA, kD, 5, 2), std::invalid_argument);
}

TEST(OracleTest, ForemostAndLatestDepartureOnDiamond) {
  const auto cs = diamond_set();
  EXPECT_EQ(oracle_min_arrival(cs, kA, kD, 1, 6), 5u);
  EXPECT_EQ(oracle_max_departure_at_arrival(cs, kA, kD, 1, 6, 5), 2u);
  EXPECT_EQ(oracle_min_arrival(cs, kA, kD, 3, 6), 6u);
  EXPECT_EQ(oracle_max_departure_at_arrival(cs, kA, kD, 3, 6, 6), 4u);
  EXPECT_FALSE(oracle_min_arrival(cs, kB, kA, 0, 100).has_value());
  EXPECT_FALSE(oracle_max_departure_at_arrival(cs, kB, kA, 0, 100, 5).has_value());
}

TEST(OracleTest, RepresentativeTuplesOfDiamond) {
  const auto reps = oracle_representative_tuples(diamond_set());
  std::vector<testing::ExpectedTuple> flat;
  for (const auto& [pair, entries] : reps) {
    for (const TreeEntry& e : entries) flat.push_back({pair.first, pair.second, e.interval, e.successor});
  }
  EXPECT_EQ(flat, testing::diamond_tuples());
}

TEST(OracleTest, EmptyContactSet) {
  const ContactSet cs({3, 1}, {});
  EXPECT_TRUE(oracle_representative_tuples(cs).empty());
  EXPECT_FALSE(oracle_reach(cs, 0, 1, 0, 10));
}

// The earliest-arrival sweep must agree with brute-force enumeration of every
// contact sequence of at most n - 1 hops.
TEST(OracleTest, SweepMatchesJourneyEnumeration) {
  std::mt19937_64 rng(314);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 2 + rng() % 4;
    const Timestamp tau = 1 + rng() % 6;
    const Timestamp delta = rng() % 3;
    const auto inst = testing::random_instance(rng, n, tau, 0.35, delta);
    const ContactSet cs(inst.config, inst.contacts);
    for (VertexId u = 0; u < n; ++u) {
      const auto journeys = testing::enumerate_journeys(inst.contacts, n, delta, u, n - 1);
      for (VertexId v = 0; v < n; ++v) {
        if (v == u) continue;
        for (Timestamp t1 = 0; t1 <= tau + delta + 1; ++t1) {
          for (Timestamp t2 = t1; t2 <= tau + delta + 1; ++t2) {
            ASSERT_EQ(oracle_reach(cs, u, v, t1, t2), testing::enumerated_reach(journeys[v], t1, t2))
                << "round " << round << " " << u << "->" << v << " [" << t1 << "," << t2 << "]";
          }
        }
      }
    }
  }
}

TEST(OracleTest, ReachabilityIsMonotoneInTheWindow) {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 30; ++round) {
    const auto inst = testing::random_instance(rng, 5, 10, 0.2, 1);
    const ContactSet cs(inst.config, inst.contacts);
    for (int probe = 0; probe < 200; ++probe) {
      const VertexId u = rng() % 5;
      const VertexId v = rng() % 5;
      Timestamp t1 = rng() % 12;
      Timestamp t2 = rng() % 12;
      if (t1 > t2) std::swap(t1, t2);
      if (!oracle_reach(cs, u, v, t1, t2)) continue;
      const Timestamp wider_lo = t1 - std::min<Timestamp>(t1, rng() % 3);
      const Timestamp wider_hi = t2 + rng() % 3;
      EXPECT_TRUE(oracle_reach(cs, u, v, wider_lo, wider_hi));
    }
  }
}

TEST(OracleTest, ReachIffSomeRepresentativeTupleFits) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 30; ++round) {
    const auto inst = testing::random_instance(rng, 5, 8, 0.25, rng() % 2);
    const ContactSet cs(inst.config, inst.contacts);
    const auto reps = oracle_representative_tuples(cs);
    for (VertexId u = 0; u < 5; ++u) {
      for (VertexId v = 0; v < 5; ++v) {
        if (u == v) continue;
        const auto it = reps.find({u, v});
        for (Timestamp t1 = 0; t1 <= 10; ++t1) {
          for (Timestamp t2 = t1; t2 <= 10; ++t2) {
            bool fits = false;
            if (it != reps.end()) {
              for (const TreeEntry& e : it->second) fits = fits || TimeInterval{t1, t2}.contains(e.interval);
            }
            ASSERT_EQ(oracle_reach(cs, u, v, t1, t2), fits);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace ttc::oracle
