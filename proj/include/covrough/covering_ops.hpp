#pragma once

#include <cstddef>
#include <string_view>

#include "covrough/approximation.hpp"

namespace covrough {

enum class OperatorTag { Reduct, Int, Nei, Join, Meet, DefinableClosure };

[[nodiscard]] std::string_view to_string(OperatorTag tag) noexcept;

/// True iff the member is not a union of other members. A member C is such a
/// union exactly when the union of the other members contained in C is C.
[[nodiscard]] bool is_irreducible(const Covering& covering, std::size_t member_index);

/// The members irreducible in `covering` (decided against the original
/// covering, not by iterative deletion).
[[nodiscard]] Covering reduct(const Covering& covering);

/// True iff the member is not an intersection of other members, i.e. the
/// other members strictly containing it are absent or intersect to more.
[[nodiscard]] bool is_non_intersectional(const Covering& covering, std::size_t member_index);

/// The non-intersectional members.
[[nodiscard]] Covering int_op(const Covering& covering);

/// The family of all neighborhoods {N(x) | x in U}.
[[nodiscard]] Covering nei_op(const ApproxSpace& space);
[[nodiscard]] Covering nei_op(const Covering& covering);

/// Union of the two member families. Throws UniverseMismatch.
[[nodiscard]] Covering join_op(const Covering& a, const Covering& b);

/// Neighborhoods taken in the joined family, exactly as defined (singleton
/// neighborhoods are kept). Throws UniverseMismatch.
[[nodiscard]] Covering meet_op(const Covering& a, const Covering& b);

/// All unions of nonempty sub-families. Throws CoveringTooLarge past `cap`.
[[nodiscard]] Covering definable_closure(const Covering& covering,
                                         std::size_t cap = kDefaultSubcoverCap);

/// Applies a unary operator tag (Reduct, Int, Nei, DefinableClosure).
/// Throws InvalidArgument for the binary tags.
[[nodiscard]] Covering apply_unary(OperatorTag tag, const Covering& covering);
/// Applies Join or Meet. Throws InvalidArgument for the unary tags.
[[nodiscard]] Covering apply_binary(OperatorTag tag, const Covering& a, const Covering& b);

/// Whether the two coverings induce the same lower approximation for every
/// subset. Decided by comparing reducts.
[[nodiscard]] bool same_lower_operator(const Covering& a, const Covering& b);

/// Whether the two coverings induce the same upper approximation for every
/// subset. Decided by comparing neighborhoods pointwise.
[[nodiscard]] bool same_upper_operator(const Covering& a, const Covering& b);

/// Exhaustive oracles for the two predicates above: iterate every subset.
/// Throws OutOfSupportedRange for universes above kExhaustiveOracleLimit.
inline constexpr std::size_t kExhaustiveOracleLimit = 12;
[[nodiscard]] bool same_lower_operator_exhaustive(const Covering& a, const Covering& b);
[[nodiscard]] bool same_upper_operator_exhaustive(const Covering& a, const Covering& b);

}  // namespace covrough
