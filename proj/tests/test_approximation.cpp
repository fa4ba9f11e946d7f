#include <gtest/gtest.h>

#include "covrough/approximation.hpp"
#include "covrough/enumeration.hpp"
#include "covrough/reference.hpp"
#include "oracles.hpp"

using namespace covrough;

TEST(Approximation, FourElementReferenceSpace) {
  const ApproxSpace sp(reference::ex1_covering());
  const Universe& u = sp.universe();
  EXPECT_EQ(neighborhood(sp, "a"), u.subset({"a"}));
  EXPECT_EQ(neighborhood(sp, "b"), u.subset({"b"}));
  EXPECT_EQ(neighborhood(sp, "c"), u.subset({"a", "c"}));
  EXPECT_EQ(neighborhood(sp, "d"), u.subset({"b", "d"}));
  const Subset x = u.subset({"a", "d"});
  EXPECT_TRUE(lower(sp, x).is_empty());
  EXPECT_EQ(upper_def3(sp, x), u.subset({"a", "b", "d"}));
  EXPECT_EQ(upper_neigh(sp, x), u.subset({"a", "b", "d"}));
  EXPECT_EQ(upper_subcov(sp, x), u.subset({"a", "b", "d"}));
}

TEST(Approximation, SubcoveringsOfAD) {
  const ApproxSpace sp(reference::ex1_covering());
  const auto fam = subcoverings(sp, sp.universe().subset({"a", "d"}));
  // Member order {a,b}, {a,c}, {b,d}: {C1,C3}=0b101, {C2,C3}=0b110, all=0b111.
  EXPECT_EQ(fam.members, (std::vector<FamilyMask>{0b101, 0b110, 0b111}));
  for (auto f : fam.members) EXPECT_TRUE(is_subset(fam.target, fam.union_of(f)));
  EXPECT_EQ(upper_subcov_nontrivial(sp, fam.target), sp.universe().subset({"a", "b", "d"}));
}

TEST(Approximation, EmptyAndFullSets) {
  for (const auto& c : all_coverings(reference::x_universe(3))) {
    const ApproxSpace sp(c);
    const Universe& u = sp.universe();
    EXPECT_TRUE(lower(sp, u.empty()).is_empty());
    EXPECT_TRUE(upper_neigh(sp, u.empty()).is_empty());
    EXPECT_TRUE(upper_def3(sp, u.empty()).is_empty());
    EXPECT_TRUE(upper_subcov(sp, u.empty()).is_empty());
    EXPECT_EQ(lower(sp, u.full()), u.full());
    EXPECT_EQ(upper_neigh(sp, u.full()), u.full());
  }
}

// All three upper routes and the lower approximation against the
// std::set implementations, every covering and subset at n <= 3.
TEST(Approximation, MatchesBruteForceOracle) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const Universe u = reference::x_universe(n);
    for (const auto& c : all_coverings(u)) {
      const ApproxSpace sp(c);
      const auto fam = oracle::to_family(c);
      for (Mask x = 0; x <= u.full_bits(); ++x) {
        const Subset xs = u.from_bits(x);
        const auto ox = oracle::to_set(x);
        const auto expected_upper = oracle::upper_by_subfamilies(fam, n, ox);
        EXPECT_EQ(oracle::to_set(lower(sp, xs).bits()), oracle::lower(fam, ox));
        EXPECT_EQ(oracle::to_set(upper_subcov(sp, xs).bits()), expected_upper) << c.to_string();
        EXPECT_EQ(oracle::to_set(upper_neigh(sp, xs).bits()), expected_upper) << c.to_string();
        EXPECT_EQ(oracle::to_set(upper_def3(sp, xs).bits()), expected_upper) << c.to_string();
      }
    }
  }
}

TEST(Approximation, SeededAgreementAtLargerN) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 5 + seed % 4;
    const Universe u = reference::x_universe(n);
    const ApproxSpace sp(random_covering(u, seed, 0.3));
    SeededRng rng(seed);
    for (int k = 0; k < 8; ++k) {
      const Subset x = u.from_bits(rng.bits(n));
      const Subset up = upper_neigh(sp, x);
      EXPECT_EQ(upper_def3(sp, x), up);
      EXPECT_EQ(upper_subcov(sp, x), up);
      EXPECT_TRUE(is_subset(lower(sp, x), x));
      EXPECT_TRUE(is_subset(x, up));
    }
  }
}

TEST(Approximation, Errors) {
  const ApproxSpace sp(reference::ex1_covering());
  const Universe other({"a", "b", "c", "e"});
  EXPECT_THROW((void)lower(sp, other.full()), Error);
  EXPECT_THROW((void)neighborhood(sp, "z"), Error);
  try {
    (void)neighborhood(sp, 9);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownElement);
  }
  try {
    (void)upper_subcov(sp, sp.universe().subset({"a"}), 2);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CoveringTooLarge);
  }
  // A single-member covering has no proper subcovering of anything nonempty.
  const ApproxSpace one(Covering(reference::x_universe(2), {0b11}));
  try {
    (void)upper_subcov_nontrivial(one, one.universe().full());
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OnlyTrivialSubcovering);
  }
}

TEST(Approximation, KernelsAgreeWithWrappers) {
  const ApproxSpace sp(reference::ex4_covering());
  for (Mask x = 0; x < 16; ++x) {
    const Subset xs = sp.universe().from_bits(x);
    EXPECT_EQ(kernel::lower(sp.covering().masks(), x), lower(sp, xs).bits());
    EXPECT_EQ(kernel::upper(sp.neighborhoods(), x), upper_neigh(sp, xs).bits());
  }
}
