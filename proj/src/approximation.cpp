#include "covrough/approximation.hpp"

#include <algorithm>

namespace covrough {

namespace kernel {

Mask lower(std::span<const Mask> members, Mask x) noexcept {
  Mask out = 0;
  for (const Mask m : members) {
    if (mask_subset(m, x)) out |= m;
  }
  return out;
}

Mask upper(const NeighborhoodTable& table, Mask x) noexcept {
  Mask out = 0;
  for_each_bit(x, [&](std::size_t i) { out |= table[i]; });
  return out;
}

}  // namespace kernel

namespace {

void require_space_universe(const ApproxSpace& space, const Subset& x) {
  require_same_universe(space.universe(), x.universe());
}

void require_cap(const ApproxSpace& space, std::size_t cap) {
  const std::size_t k = space.covering().size();
  if (k > cap || k >= 63) {
    throw Error(ErrorCode::CoveringTooLarge, std::to_string(k) + " members exceed the cap of " +
                                                 std::to_string(cap));
  }
}

// Depth-first walk over every sub-family whose union contains `target`.
// `suffix[i]` is the union of members i..k-1 and prunes branches that can no
// longer reach the target.
template <typename Visit>
void walk_subcoverings(std::span<const Mask> members, Mask target, Visit&& visit) {
  const std::size_t k = members.size();
  std::vector<Mask> suffix(k + 1, 0);
  for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] | members[i];

  struct Frame {
    std::size_t next;
    FamilyMask chosen;
    Mask covered;
  };
  std::vector<Frame> stack{{0, 0, 0}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (!mask_subset(target, f.covered | suffix[f.next])) continue;
    if (f.next == k) {
      visit(f.chosen, f.covered);
      continue;
    }
    stack.push_back({f.next + 1, f.chosen | (FamilyMask{1} << f.next), f.covered | members[f.next]});
    stack.push_back({f.next + 1, f.chosen, f.covered});
  }
}

}  // namespace

Subset neighborhood(const ApproxSpace& space, std::size_t x) {
  if (x >= space.universe().size()) {
    throw Error(ErrorCode::UnknownElement, "index " + std::to_string(x));
  }
  return Subset(space.universe(), space.neighborhoods()[x]);
}

Subset neighborhood(const ApproxSpace& space, std::string_view label) {
  return neighborhood(space, space.universe().index_of(label));
}

Subset lower(const ApproxSpace& space, const Subset& x) {
  require_space_universe(space, x);
  return Subset(space.universe(), kernel::lower(space.covering().masks(), x.bits()));
}

Subset upper_def3(const ApproxSpace& space, const Subset& x) {
  require_space_universe(space, x);
  const Mask low = kernel::lower(space.covering().masks(), x.bits());
  Mask out = low;
  for_each_bit(x.bits() & ~low, [&](std::size_t i) { out |= space.neighborhoods()[i]; });
  return Subset(space.universe(), out);
}

Subset upper_neigh(const ApproxSpace& space, const Subset& x) {
  require_space_universe(space, x);
  return Subset(space.universe(), kernel::upper(space.neighborhoods(), x.bits()));
}

Subset SubcoveringFamily::union_of(FamilyMask family) const {
  const auto masks = base.covering().masks();
  Mask out = 0;
  for_each_bit(family, [&](std::size_t i) { out |= masks[i]; });
  return Subset(base.universe(), out);
}

SubcoveringFamily subcoverings(const ApproxSpace& space, const Subset& x, std::size_t cap) {
  require_space_universe(space, x);
  require_cap(space, cap);
  SubcoveringFamily out{space, x, {}};
  walk_subcoverings(space.covering().masks(), x.bits(),
                    [&](FamilyMask family, Mask) { out.members.push_back(family); });
  std::sort(out.members.begin(), out.members.end());
  return out;
}

Subset upper_subcov(const ApproxSpace& space, const Subset& x, std::size_t cap) {
  require_space_universe(space, x);
  require_cap(space, cap);
  Mask out = space.universe().full_bits();
  walk_subcoverings(space.covering().masks(), x.bits(),
                    [&](FamilyMask, Mask covered) { out &= covered; });
  return Subset(space.universe(), out);
}

Subset upper_subcov_nontrivial(const ApproxSpace& space, const Subset& x, std::size_t cap) {
  require_space_universe(space, x);
  require_cap(space, cap);
  const FamilyMask everything = (FamilyMask{1} << space.covering().size()) - 1;
  Mask out = space.universe().full_bits();
  bool any = false;
  walk_subcoverings(space.covering().masks(), x.bits(), [&](FamilyMask family, Mask covered) {
    if (family == everything) return;
    out &= covered;
    any = true;
  });
  if (!any) {
    throw Error(ErrorCode::OnlyTrivialSubcovering,
                "the full covering is the only subcovering of " + x.to_string());
  }
  return Subset(space.universe(), out);
}

}  // namespace covrough
