#include "covrough/covering.hpp"

#include <algorithm>

namespace covrough {

Covering::Covering(Universe universe, std::vector<Mask> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
  const Mask full = universe_.full_bits();
  Mask covered = 0;
  for (const Mask m : members_) {
    if (m == 0) throw Error(ErrorCode::EmptySet, "a covering member is empty");
    if (!mask_subset(m, full)) {
      throw Error(ErrorCode::UnknownElement, "member has elements outside the universe");
    }
    covered |= m;
  }
  if (covered != full) {
    throw Error(ErrorCode::NotACovering,
                "members miss " + Subset(universe_, full & ~covered).to_string());
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Subset Covering::member(std::size_t index) const {
  if (index >= members_.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "member " + std::to_string(index) + " of " + std::to_string(members_.size()));
  }
  return Subset(universe_, members_[index]);
}

std::vector<Subset> Covering::members() const {
  std::vector<Subset> out;
  out.reserve(members_.size());
  for (const Mask m : members_) out.emplace_back(universe_, m);
  return out;
}

bool Covering::contains(Mask member) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), member);
}

bool Covering::is_partition() const noexcept {
  Mask seen = 0;
  for (const Mask m : members_) {
    if ((seen & m) != 0) return false;
    seen |= m;
  }
  return true;
}

std::string Covering::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i != 0) out += ", ";
    out += Subset(universe_, members_[i]).to_string();
  }
  return out + "}";
}

Covering make_covering(const Universe& universe,
                       const std::vector<std::vector<std::string>>& families) {
  std::vector<Mask> members;
  members.reserve(families.size());
  for (const auto& labels : families) {
    if (labels.empty()) throw Error(ErrorCode::EmptySet, "a listed member is empty");
    members.push_back(universe.subset(labels).bits());
  }
  return Covering(universe, std::move(members));
}

NeighborhoodTable::NeighborhoodTable(const Covering& covering) {
  const std::size_t n = covering.universe().size();
  table_.assign(n, covering.universe().full_bits());
  for (const Mask m : covering.masks()) {
    for_each_bit(m, [&](std::size_t x) { table_[x] &= m; });
  }
}

ApproxSpace::ApproxSpace(Covering covering)
    : covering_(std::move(covering)), neighborhoods_(covering_) {}

ApproxSpace::ApproxSpace(const Universe& universe, Covering covering)
    : covering_(std::move(covering)), neighborhoods_(covering_) {
  require_same_universe(universe, covering_.universe());
}

}  // namespace covrough
