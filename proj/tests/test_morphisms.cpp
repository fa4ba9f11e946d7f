#include <gtest/gtest.h>

#include "covrough/approximation.hpp"
#include "covrough/covering_ops.hpp"
#include "covrough/enumeration.hpp"
#include "covrough/morphisms.hpp"
#include "covrough/reference.hpp"

using namespace covrough;

namespace {

std::vector<Mapping> every_mapping(const Universe& u, const Universe& v) {
  std::vector<Mapping> out;
  std::vector<std::size_t> t(u.size(), 0);
  while (true) {
    out.emplace_back(u, v, t);
    std::size_t i = 0;
    while (i < t.size() && ++t[i] == v.size()) t[i++] = 0;
    if (i == t.size()) return out;
  }
}

}  // namespace

TEST(Morphisms, IncomparableUpperWitness) {
  const auto r = reference::rmk5_case();
  const Universe& v = r.target.universe();
  EXPECT_TRUE(is_homomorphism(r.map, r.source, r.target, HomMode::Definable));
  EXPECT_FALSE(is_homomorphism(r.map, r.source, r.target, HomMode::Strict));
  EXPECT_FALSE(is_isomorphism(r.map, r.source, r.target));
  const auto rep = preservation_report(r.map, r.source, r.target, r.x);
  EXPECT_EQ(upper_neigh(r.source, r.x), r.source.universe().subset({"x2", "x4", "x5"}));
  EXPECT_EQ(rep.f_upper_x, v.subset({"y2", "y3", "y4"}));
  EXPECT_EQ(rep.upper_f_x, v.subset({"y1", "y2", "y3"}));
  EXPECT_FALSE(rep.upper_equal);
  EXPECT_TRUE(rep.lower_inclusion_holds);
  EXPECT_FALSE(rep.neighborhoods_transported.has_value());
  EXPECT_EQ(preimage(r.map, v.subset({"y1"})), r.source.universe().subset({"x1", "x3"}));
}

TEST(Morphisms, MappingConstruction) {
  const Universe u = reference::x_universe(3);
  const Universe v = reference::x_universe(2, 'y');
  EXPECT_THROW(Mapping(u, v, {0, 1}), Error);
  EXPECT_THROW(Mapping(u, v, {0, 1, 2}), Error);
  const Mapping f = make_mapping(u, v, {{"x1", "y1"}, {"x2", "y2"}, {"x3", "y2"}});
  EXPECT_TRUE(f.is_surjective());
  EXPECT_FALSE(f.is_injective());
  EXPECT_THROW((void)inverse(f), Error);
  EXPECT_THROW((void)make_mapping(u, v, {{"x1", "y1"}, {"x2", "y2"}}), Error);
  EXPECT_EQ(image(f, u.full()), v.full());
}

TEST(Morphisms, InverseAndComposition) {
  const Universe u = reference::x_universe(4);
  SeededRng rng(11);
  for (int i = 0; i < 50; ++i) {
    const Mapping p(u, u, rng.permutation(4));
    const Mapping q(u, u, rng.permutation(4));
    EXPECT_EQ(compose(inverse(p), p), identity_mapping(u));
    EXPECT_EQ(compose(p, inverse(p)), identity_mapping(u));
    const Mapping pq = compose(p, q);
    for (std::size_t x = 0; x < 4; ++x) EXPECT_EQ(pq(x), p(q(x)));
  }
}

// Homomorphisms compose, the strict reading implies the definable one, and
// the lower inclusion holds for every definable homomorphism.
TEST(Morphisms, HomomorphismProperties) {
  const Universe u = reference::x_universe(3);
  const auto maps = every_mapping(u, u);
  ASSERT_EQ(maps.size(), 27U);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const ApproxSpace a(random_covering(u, seed, 0.5));
    const ApproxSpace b(random_covering(u, seed + 100, 0.5));
    const ApproxSpace c(random_covering(u, seed + 200, 0.5));
    for (const auto& f : maps) {
      const bool fab = is_homomorphism(f, a, b);
      if (is_homomorphism(f, a, b, HomMode::Strict)) EXPECT_TRUE(fab);
      if (fab) {
        for (Mask x = 0; x < 8; ++x) {
          EXPECT_TRUE(preservation_report(f, a, b, u.from_bits(x)).lower_inclusion_holds);
        }
      }
      for (const auto& g : maps) {
        if (fab && is_homomorphism(g, b, c)) EXPECT_TRUE(is_homomorphism(compose(g, f), a, c));
        if (is_homomorphism(f, a, b, HomMode::Strict) && is_homomorphism(g, b, c, HomMode::Strict)) {
          EXPECT_TRUE(is_homomorphism(compose(g, f), a, c, HomMode::Strict));
        }
      }
    }
  }
}

TEST(Morphisms, IdentityIntoDerivedCoverings) {
  for (const auto& c : all_coverings(reference::x_universe(3))) {
    const Mapping id = identity_mapping(c.universe());
    const ApproxSpace base(c);
    EXPECT_TRUE(is_isomorphism(id, base, ApproxSpace(reduct(c))));
    EXPECT_TRUE(is_homomorphism(id, base, ApproxSpace(nei_op(c))));
    EXPECT_TRUE(is_homomorphism(id, ApproxSpace(int_op(c)), base));
    EXPECT_TRUE(is_isomorphism(id, base, base, HomMode::Strict));
  }
  // The converse directions fail on specific coverings.
  const Covering tri = reference::rmk4_covering();
  EXPECT_FALSE(is_homomorphism(identity_mapping(tri.universe()), ApproxSpace(nei_op(tri)), ApproxSpace(tri)));
  const Covering e4 = reference::ex4_covering();
  EXPECT_FALSE(is_homomorphism(identity_mapping(e4.universe()), ApproxSpace(e4), ApproxSpace(int_op(e4))));
}

TEST(Morphisms, PermutationIsomorphismsPreserveEverything) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 2 + seed % 5;
    const Universe u = reference::x_universe(n);
    const Universe v = reference::x_universe(n, 'y');
    const Covering c = random_covering(u, seed, 0.4);
    SeededRng rng(seed);
    const Mapping f(u, v, rng.permutation(n));
    std::vector<Mask> moved;
    for (auto m : c.masks()) moved.push_back(image(f, u.from_bits(m)).bits());
    const ApproxSpace src(c);
    const ApproxSpace dst(Covering(v, moved));
    ASSERT_TRUE(is_isomorphism(f, src, dst, HomMode::Strict));
    for (int k = 0; k < 5; ++k) {
      const auto rep = preservation_report(f, src, dst, u.from_bits(rng.bits(n)));
      EXPECT_TRUE(rep.lower_equal);
      EXPECT_TRUE(rep.upper_equal);
      EXPECT_EQ(rep.neighborhoods_transported, std::optional<bool>(true));
    }
  }
}

TEST(Morphisms, PreservationNeedsHomomorphism) {
  const auto r = reference::rmk5_case();
  const Mapping back(r.target.universe(), r.source.universe(), {0, 1, 2, 3});
  ASSERT_FALSE(is_homomorphism(back, r.target, r.source));
  try {
    (void)preservation_report(back, r.target, r.source, r.target.universe().full());
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAHomomorphism);
  }
}
