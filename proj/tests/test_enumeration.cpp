#include <gtest/gtest.h>

#include <set>

#include "covrough/enumeration.hpp"
#include "covrough/reference.hpp"
#include "oracles.hpp"

using namespace covrough;

TEST(Count, MatchesBruteForceUpToFour) {
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_EQ(count_coverings(n), BigInt(oracle::count_coverings_brute(n))) << "n=" << n;
  }
}

TEST(Count, KnownValues) {
  EXPECT_EQ(count_coverings(5), BigInt(2147321017));
  // Value for n = 6 computed independently with arbitrary-precision integers.
  EXPECT_EQ(count_coverings(6).str(), "9223372023970362989");
  EXPECT_THROW((void)count_coverings(0), Error);
  EXPECT_THROW((void)count_coverings(7), Error);
}

TEST(Enumeration, DistinctCanonicalAndComplete) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Universe u = reference::x_universe(n);
    std::set<std::vector<Mask>> seen;
    std::uint64_t last = 0;
    auto stream = enumerate_coverings(u);
    while (auto c = stream.next()) {
      EXPECT_GT(stream.candidate_index(), last);
      last = stream.candidate_index();
      std::vector<Mask> m(c->masks().begin(), c->masks().end());
      EXPECT_TRUE(std::is_sorted(m.begin(), m.end()));
      EXPECT_TRUE(seen.insert(m).second);
    }
    EXPECT_EQ(BigInt(seen.size()), count_coverings(n));
    EXPECT_FALSE(stream.next().has_value());
  }
}

TEST(Enumeration, RejectsLargeUniverse) {
  try {
    (void)enumerate_coverings(reference::x_universe(5));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UniverseTooLargeForEnumeration);
  }
}

TEST(Partitions, BellNumbers) {
  const std::vector<std::size_t> bell{1, 2, 5, 15, 52, 203, 877};
  for (std::size_t n = 1; n <= bell.size(); ++n) {
    const auto parts = all_partitions(reference::x_universe(n));
    EXPECT_EQ(parts.size(), bell[n - 1]);
    std::set<std::vector<Mask>> seen;
    for (const auto& p : parts) {
      EXPECT_TRUE(p.is_partition());
      seen.insert({p.masks().begin(), p.masks().end()});
    }
    EXPECT_EQ(seen.size(), parts.size());
  }
}

TEST(Rng, Deterministic) {
  SeededRng a(99), b(99);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  SeededRng r(1);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(r.below(7), 7U);
    const double x = r.unit();
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
    EXPECT_EQ(r.bits(5) & ~full_mask(5), 0U);
  }
  auto p = r.permutation(9);
  std::sort(p.begin(), p.end());
  for (std::size_t i = 0; i < 9; ++i) EXPECT_EQ(p[i], i);
}

TEST(Random, CoveringsAreValidAndReproducible) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const std::size_t n = 1 + seed % 12;
    const Universe u = reference::x_universe(n);
    const double density = 0.1 + 0.2 * static_cast<double>(seed % 5);
    const Covering c = random_covering(u, seed, density);
    EXPECT_EQ(c, random_covering(u, seed, density));
    EXPECT_LE(c.size(), 20U);
    const Covering p = random_partition(u, seed);
    EXPECT_TRUE(p.is_partition());
    EXPECT_EQ(p, random_partition(u, seed));
  }
  EXPECT_THROW((void)random_covering(reference::x_universe(3), 1, 0.0), Error);
  EXPECT_THROW((void)random_covering(reference::x_universe(3), 1, 1.5), Error);
}
