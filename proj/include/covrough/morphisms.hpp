#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covrough/covering.hpp"

namespace covrough {

/// A total function between two universes, stored as an index table.
class Mapping {
 public:
  /// Throws IncompleteMapping when the table size differs from the source
  /// size, UnknownElement when an image index is outside the target.
  Mapping(Universe source, Universe target, std::vector<std::size_t> table);

  [[nodiscard]] const Universe& source() const noexcept { return source_; }
  [[nodiscard]] const Universe& target() const noexcept { return target_; }
  [[nodiscard]] std::size_t operator()(std::size_t x) const { return table_.at(x); }
  [[nodiscard]] const std::vector<std::size_t>& table() const noexcept { return table_; }

  [[nodiscard]] bool is_injective() const;
  [[nodiscard]] bool is_surjective() const;
  [[nodiscard]] bool is_bijective() const { return is_injective() && is_surjective(); }

  friend bool operator==(const Mapping&, const Mapping&) = default;

 private:
  Universe source_;
  Universe target_;
  std::vector<std::size_t> table_;
};

/// From label pairs; keys must cover the source exactly. Throws
/// IncompleteMapping or UnknownLabel.
[[nodiscard]] Mapping make_mapping(const Universe& source, const Universe& target,
                                   const std::map<std::string, std::string>& pairs);
[[nodiscard]] Mapping identity_mapping(const Universe& universe);
/// Throws NotBijective.
[[nodiscard]] Mapping inverse(const Mapping& f);
/// g after f. Throws UniverseMismatch when f's target is not g's source.
[[nodiscard]] Mapping compose(const Mapping& g, const Mapping& f);

[[nodiscard]] Subset image(const Mapping& f, const Subset& x);
[[nodiscard]] Subset preimage(const Mapping& f, const Subset& y);

/// Strict: each member maps onto a member of the target covering.
/// Definable: each member maps onto a union of target members.
enum class HomMode { Strict, Definable };

[[nodiscard]] std::string_view to_string(HomMode mode) noexcept;

[[nodiscard]] bool is_homomorphism(const Mapping& f, const ApproxSpace& src,
                                   const ApproxSpace& dst, HomMode mode = HomMode::Definable);

/// Bijective homomorphism whose inverse is a homomorphism too. A mapping
/// that is not bijective yields false, not an error.
[[nodiscard]] bool is_isomorphism(const Mapping& f, const ApproxSpace& src,
                                  const ApproxSpace& dst, HomMode mode = HomMode::Definable);

/// How a homomorphism treats the approximations of one subset. All four
/// sets are returned so that a failed comparison is self-describing.
struct PreservationReport {
  Subset f_lower_x;  // f(X⁻)
  Subset lower_f_x;  // f(X)⁻
  Subset f_upper_x;  // f(X⁺)
  Subset upper_f_x;  // f(X)⁺
  bool lower_inclusion_holds;  // f(X⁻) ⊆ f(X)⁻
  bool lower_equal;
  bool upper_equal;
  bool isomorphism;
  /// f(N(x)) = N(f(x)) for every x; only evaluated for isomorphisms.
  std::optional<bool> neighborhoods_transported;
};

/// Requires a Definable-mode homomorphism; throws NotAHomomorphism otherwise.
[[nodiscard]] PreservationReport preservation_report(const Mapping& f, const ApproxSpace& src,
                                                     const ApproxSpace& dst, const Subset& x);

}  // namespace covrough
