#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "covrough/covering.hpp"

namespace covrough {

/// Default bound on covering size for the subfamily-enumerating routes.
inline constexpr std::size_t kDefaultSubcoverCap = 20;

/// Bitmask over covering-member indices (bit i = member i).
using FamilyMask = std::uint64_t;

[[nodiscard]] Subset neighborhood(const ApproxSpace& space, std::size_t x);
/// Throws UnknownLabel.
[[nodiscard]] Subset neighborhood(const ApproxSpace& space, std::string_view label);

/// Union of all members contained in X.
[[nodiscard]] Subset lower(const ApproxSpace& space, const Subset& x);

/// Upper approximation from the defining formula: the neighborhoods of the
/// points of X outside its lower approximation, plus the lower approximation.
[[nodiscard]] Subset upper_def3(const ApproxSpace& space, const Subset& x);

/// Upper approximation as the union of N(x) over x in X. This is the
/// production route.
[[nodiscard]] Subset upper_neigh(const ApproxSpace& space, const Subset& x);

/// Sub-families of the covering whose union contains a target set.
struct SubcoveringFamily {
  ApproxSpace base;
  Subset target;
  std::vector<FamilyMask> members;  // ascending

  /// Union of the covering members selected by `family`.
  [[nodiscard]] Subset union_of(FamilyMask family) const;
};

/// Every sub-family C' of the covering with union(C') ⊇ X, the empty family
/// included exactly when X is empty. Exponential; throws CoveringTooLarge
/// when the covering has more than `cap` members.
[[nodiscard]] SubcoveringFamily subcoverings(const ApproxSpace& space, const Subset& x,
                                             std::size_t cap = kDefaultSubcoverCap);

/// Upper approximation as the intersection, over all subcoverings of X, of
/// their unions. Oracle route; same cap as subcoverings().
[[nodiscard]] Subset upper_subcov(const ApproxSpace& space, const Subset& x,
                                  std::size_t cap = kDefaultSubcoverCap);

/// As upper_subcov but leaving out the full covering. Throws
/// OnlyTrivialSubcovering when no proper sub-family covers X.
[[nodiscard]] Subset upper_subcov_nontrivial(const ApproxSpace& space, const Subset& x,
                                             std::size_t cap = kDefaultSubcoverCap);

/// Mask-level kernels used by the law checker's hot loops.
namespace kernel {
[[nodiscard]] Mask lower(std::span<const Mask> members, Mask x) noexcept;
[[nodiscard]] Mask upper(const NeighborhoodTable& table, Mask x) noexcept;
}  // namespace kernel

}  // namespace covrough
