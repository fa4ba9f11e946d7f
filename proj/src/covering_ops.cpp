#include "covrough/covering_ops.hpp"

#include <algorithm>

namespace covrough {

std::string_view to_string(OperatorTag tag) noexcept {
  switch (tag) {
    case OperatorTag::Reduct: return "reduct";
    case OperatorTag::Int: return "int";
    case OperatorTag::Nei: return "nei";
    case OperatorTag::Join: return "join";
    case OperatorTag::Meet: return "meet";
    case OperatorTag::DefinableClosure: return "closure";
  }
  return "unknown";
}

namespace {

void check_index(const Covering& covering, std::size_t index) {
  if (index >= covering.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "member " + std::to_string(index) + " of " + std::to_string(covering.size()));
  }
}

bool irreducible_at(std::span<const Mask> members, std::size_t index) {
  const Mask c = members[index];
  Mask below = 0;
  for (std::size_t j = 0; j < members.size(); ++j) {
    if (j != index && mask_subset(members[j], c)) below |= members[j];
  }
  return below != c;
}

bool non_intersectional_at(std::span<const Mask> members, std::size_t index) {
  const Mask c = members[index];
  Mask above = ~Mask{0};
  bool any = false;
  for (std::size_t j = 0; j < members.size(); ++j) {
    if (j != index && mask_subset(c, members[j])) {
      above &= members[j];
      any = true;
    }
  }
  return !any || above != c;
}

void require_oracle_size(const Universe& u) {
  if (u.size() > kExhaustiveOracleLimit) {
    throw Error(ErrorCode::OutOfSupportedRange,
                "exhaustive subset oracle supports at most " +
                    std::to_string(kExhaustiveOracleLimit) + " elements");
  }
}

}  // namespace

bool is_irreducible(const Covering& covering, std::size_t member_index) {
  check_index(covering, member_index);
  return irreducible_at(covering.masks(), member_index);
}

Covering reduct(const Covering& covering) {
  const auto members = covering.masks();
  std::vector<Mask> kept;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (irreducible_at(members, i)) kept.push_back(members[i]);
  }
  return Covering(covering.universe(), std::move(kept));
}

bool is_non_intersectional(const Covering& covering, std::size_t member_index) {
  check_index(covering, member_index);
  return non_intersectional_at(covering.masks(), member_index);
}

Covering int_op(const Covering& covering) {
  const auto members = covering.masks();
  std::vector<Mask> kept;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (non_intersectional_at(members, i)) kept.push_back(members[i]);
  }
  return Covering(covering.universe(), std::move(kept));
}

Covering nei_op(const ApproxSpace& space) {
  const auto table = space.neighborhoods().masks();
  return Covering(space.universe(), std::vector<Mask>(table.begin(), table.end()));
}

Covering nei_op(const Covering& covering) { return nei_op(ApproxSpace(covering)); }

Covering join_op(const Covering& a, const Covering& b) {
  require_same_universe(a.universe(), b.universe());
  std::vector<Mask> members(a.masks().begin(), a.masks().end());
  members.insert(members.end(), b.masks().begin(), b.masks().end());
  return Covering(a.universe(), std::move(members));
}

Covering meet_op(const Covering& a, const Covering& b) {
  require_same_universe(a.universe(), b.universe());
  // Neighborhood of x in the plain union of both families.
  const std::size_t n = a.universe().size();
  std::vector<Mask> table(n, a.universe().full_bits());
  for (const auto* family : {&a, &b}) {
    for (const Mask m : family->masks()) {
      for_each_bit(m, [&](std::size_t x) { table[x] &= m; });
    }
  }
  return Covering(a.universe(), std::move(table));
}

Covering definable_closure(const Covering& covering, std::size_t cap) {
  const auto members = covering.masks();
  const std::size_t k = members.size();
  if (k > cap || k >= 31) {
    throw Error(ErrorCode::CoveringTooLarge,
                std::to_string(k) + " members exceed the cap of " + std::to_string(cap));
  }
  // unions[s] = union of the members selected by s, built from s without its lowest bit.
  std::vector<Mask> unions(std::size_t{1} << k, 0);
  for (std::size_t s = 1; s < unions.size(); ++s) {
    const auto low = static_cast<std::size_t>(std::countr_zero(s));
    unions[s] = unions[s & (s - 1)] | members[low];
  }
  std::vector<Mask> out(unions.begin() + 1, unions.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Covering(covering.universe(), std::move(out));
}

Covering apply_unary(OperatorTag tag, const Covering& covering) {
  switch (tag) {
    case OperatorTag::Reduct: return reduct(covering);
    case OperatorTag::Int: return int_op(covering);
    case OperatorTag::Nei: return nei_op(covering);
    case OperatorTag::DefinableClosure: return definable_closure(covering);
    case OperatorTag::Join:
    case OperatorTag::Meet: break;
  }
  throw Error(ErrorCode::InvalidArgument, std::string(to_string(tag)) + " is not unary");
}

Covering apply_binary(OperatorTag tag, const Covering& a, const Covering& b) {
  if (tag == OperatorTag::Join) return join_op(a, b);
  if (tag == OperatorTag::Meet) return meet_op(a, b);
  throw Error(ErrorCode::InvalidArgument, std::string(to_string(tag)) + " is not binary");
}

bool same_lower_operator(const Covering& a, const Covering& b) {
  require_same_universe(a.universe(), b.universe());
  return reduct(a) == reduct(b);
}

bool same_upper_operator(const Covering& a, const Covering& b) {
  require_same_universe(a.universe(), b.universe());
  const NeighborhoodTable na(a);
  const NeighborhoodTable nb(b);
  return std::ranges::equal(na.masks(), nb.masks());
}

bool same_lower_operator_exhaustive(const Covering& a, const Covering& b) {
  require_same_universe(a.universe(), b.universe());
  require_oracle_size(a.universe());
  const Mask full = a.universe().full_bits();
  for (Mask x = 0;; ++x) {
    if (kernel::lower(a.masks(), x) != kernel::lower(b.masks(), x)) return false;
    if (x == full) break;
  }
  return true;
}

bool same_upper_operator_exhaustive(const Covering& a, const Covering& b) {
  require_same_universe(a.universe(), b.universe());
  require_oracle_size(a.universe());
  const NeighborhoodTable na(a);
  const NeighborhoodTable nb(b);
  const Mask full = a.universe().full_bits();
  for (Mask x = 0;; ++x) {
    if (kernel::upper(na, x) != kernel::upper(nb, x)) return false;
    if (x == full) break;
  }
  return true;
}

}  // namespace covrough
