#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "covrough/universe.hpp"

namespace covrough {

/// A covering of a universe: a set of nonempty subsets whose union is the
/// whole universe. Members are kept sorted by their bit pattern read as an
/// unsigned integer and without duplicates, so structural equality is set
/// equality.
class Covering {
 public:
  /// Validates, sorts and deduplicates. Throws EmptySet, NotACovering or
  /// UnknownElement.
  Covering(Universe universe, std::vector<Mask> members);

  [[nodiscard]] const Universe& universe() const noexcept { return universe_; }
  [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
  [[nodiscard]] std::span<const Mask> masks() const noexcept { return members_; }
  /// Throws IndexOutOfRange.
  [[nodiscard]] Subset member(std::size_t index) const;
  [[nodiscard]] std::vector<Subset> members() const;
  [[nodiscard]] bool contains(Mask member) const noexcept;
  [[nodiscard]] bool is_partition() const noexcept;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Covering& a, const Covering& b) noexcept {
    return a.members_ == b.members_ && a.universe_ == b.universe_;
  }

 private:
  Universe universe_;
  std::vector<Mask> members_;
};

/// Builds a covering from label lists. Duplicate member sets are merged.
/// Throws EmptySet, UnknownLabel or NotACovering.
[[nodiscard]] Covering make_covering(const Universe& universe,
                                     const std::vector<std::vector<std::string>>& families);

/// Per-element neighborhoods N(x): the intersection of all members containing x.
class NeighborhoodTable {
 public:
  explicit NeighborhoodTable(const Covering& covering);

  [[nodiscard]] Mask operator[](std::size_t x) const noexcept { return table_[x]; }
  [[nodiscard]] std::span<const Mask> masks() const noexcept { return table_; }
  [[nodiscard]] std::size_t size() const noexcept { return table_.size(); }

 private:
  std::vector<Mask> table_;
};

/// A covering approximation space <U, C>. The neighborhood table is computed
/// once at construction.
class ApproxSpace {
 public:
  explicit ApproxSpace(Covering covering);
  /// Throws UniverseMismatch when the covering is over another universe.
  ApproxSpace(const Universe& universe, Covering covering);

  [[nodiscard]] const Universe& universe() const noexcept { return covering_.universe(); }
  [[nodiscard]] const Covering& covering() const noexcept { return covering_; }
  [[nodiscard]] const NeighborhoodTable& neighborhoods() const noexcept { return neighborhoods_; }

  friend bool operator==(const ApproxSpace& a, const ApproxSpace& b) noexcept {
    return a.covering_ == b.covering_;
  }

 private:
  Covering covering_;
  NeighborhoodTable neighborhoods_;
};

}  // namespace covrough
