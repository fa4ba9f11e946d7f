#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "covrough/error.hpp"

namespace covrough {

/// Bit pattern over a universe: element i is bit i (least significant first).
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxUniverseSize = 64;

/// Mask with the low `n` bits set.
[[nodiscard]] constexpr Mask full_mask(std::size_t n) noexcept {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

class Subset;

/// Ordered, named, finite and nonempty ground set. Elements are the indices
/// 0..n-1; names only matter at the I/O boundary. Cheap to copy (shared,
/// immutable storage).
class Universe {
 public:
  /// Throws EmptyUniverse, EmptyName, DuplicateName or UniverseTooLarge.
  explicit Universe(std::vector<std::string> names);

  [[nodiscard]] std::size_t size() const noexcept;
  [[nodiscard]] const std::string& name(std::size_t index) const;
  [[nodiscard]] const std::vector<std::string>& names() const noexcept;
  [[nodiscard]] std::optional<std::size_t> find(std::string_view label) const;
  /// Throws UnknownLabel.
  [[nodiscard]] std::size_t index_of(std::string_view label) const;
  [[nodiscard]] Mask full_bits() const noexcept { return full_mask(size()); }

  [[nodiscard]] Subset empty() const;
  [[nodiscard]] Subset full() const;
  [[nodiscard]] Subset singleton(std::size_t index) const;
  /// Throws UnknownElement if `bits` has a bit at or above size().
  [[nodiscard]] Subset from_bits(Mask bits) const;
  /// Throws UnknownLabel.
  [[nodiscard]] Subset subset(std::span<const std::string> labels) const;
  [[nodiscard]] Subset subset(std::initializer_list<std::string_view> labels) const;

  /// Universes are equal when they list the same names in the same order.
  friend bool operator==(const Universe& a, const Universe& b) noexcept;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Builds a Universe from labels, enforcing distinct nonempty names.
[[nodiscard]] Universe make_universe(std::vector<std::string> names);

/// A subset of a specific Universe. Binary operations between subsets of
/// different universes throw UniverseMismatch.
class Subset {
 public:
  Subset(Universe universe, Mask bits) noexcept : universe_(std::move(universe)), bits_(bits) {}

  [[nodiscard]] const Universe& universe() const noexcept { return universe_; }
  [[nodiscard]] Mask bits() const noexcept { return bits_; }
  [[nodiscard]] bool contains(std::size_t index) const noexcept {
    return index < 64 && ((bits_ >> index) & 1U) != 0;
  }
  [[nodiscard]] std::size_t count() const noexcept;
  [[nodiscard]] bool is_empty() const noexcept { return bits_ == 0; }

  [[nodiscard]] std::vector<std::size_t> indices() const;
  [[nodiscard]] std::vector<std::string> members() const;
  /// "{a, b}" in universe order; "{}" for the empty set.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Subset& a, const Subset& b) noexcept {
    return a.bits_ == b.bits_ && a.universe_ == b.universe_;
  }

 private:
  Universe universe_;
  Mask bits_;
};

[[nodiscard]] Subset set_union(const Subset& a, const Subset& b);
[[nodiscard]] Subset set_intersect(const Subset& a, const Subset& b);
[[nodiscard]] Subset set_difference(const Subset& a, const Subset& b);
[[nodiscard]] Subset complement(const Subset& a);
[[nodiscard]] bool is_subset(const Subset& a, const Subset& b);
[[nodiscard]] inline bool is_empty(const Subset& a) noexcept { return a.is_empty(); }
[[nodiscard]] inline std::vector<std::string> members(const Subset& a) { return a.members(); }

/// Throws UniverseMismatch unless both universes are equal.
void require_same_universe(const Universe& a, const Universe& b);

/// Mask-level helpers shared by the algorithm modules.
[[nodiscard]] constexpr bool mask_subset(Mask a, Mask b) noexcept { return (a & ~b) == 0; }

/// Calls fn(index) for each set bit, lowest first.
template <typename Fn>
constexpr void for_each_bit(Mask bits, Fn&& fn) {
  while (bits != 0) {
    const auto index = static_cast<std::size_t>(std::countr_zero(bits));
    fn(index);
    bits &= bits - 1;
  }
}

}  // namespace covrough
