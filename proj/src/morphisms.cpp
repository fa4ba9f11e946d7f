#include "covrough/morphisms.hpp"

#include "covrough/approximation.hpp"

namespace covrough {

Mapping::Mapping(Universe source, Universe target, std::vector<std::size_t> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (table_.size() != source_.size()) {
    throw Error(ErrorCode::IncompleteMapping, "mapping defines " + std::to_string(table_.size()) +
                                                  " of " + std::to_string(source_.size()) +
                                                  " source elements");
  }
  for (const std::size_t y : table_) {
    if (y >= target_.size()) {
      throw Error(ErrorCode::UnknownElement, "image index " + std::to_string(y));
    }
  }
}

bool Mapping::is_injective() const {
  Mask hit = 0;
  for (const std::size_t y : table_) {
    const Mask bit = Mask{1} << y;
    if ((hit & bit) != 0) return false;
    hit |= bit;
  }
  return true;
}

bool Mapping::is_surjective() const {
  Mask hit = 0;
  for (const std::size_t y : table_) hit |= Mask{1} << y;
  return hit == target_.full_bits();
}

Mapping make_mapping(const Universe& source, const Universe& target,
                     const std::map<std::string, std::string>& pairs) {
  std::vector<std::optional<std::size_t>> slots(source.size());
  for (const auto& [from, to] : pairs) {
    slots[source.index_of(from)] = target.index_of(to);
  }
  std::vector<std::size_t> table;
  table.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) {
      throw Error(ErrorCode::IncompleteMapping, "no image for '" + source.name(i) + "'");
    }
    table.push_back(*slots[i]);
  }
  return Mapping(source, target, std::move(table));
}

Mapping identity_mapping(const Universe& universe) {
  std::vector<std::size_t> table(universe.size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
  return Mapping(universe, universe, std::move(table));
}

Mapping inverse(const Mapping& f) {
  if (!f.is_bijective()) throw Error(ErrorCode::NotBijective, "mapping has no inverse");
  std::vector<std::size_t> table(f.target().size());
  for (std::size_t x = 0; x < f.table().size(); ++x) table[f.table()[x]] = x;
  return Mapping(f.target(), f.source(), std::move(table));
}

Mapping compose(const Mapping& g, const Mapping& f) {
  require_same_universe(f.target(), g.source());
  std::vector<std::size_t> table(f.source().size());
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = g.table()[f.table()[x]];
  return Mapping(f.source(), g.target(), std::move(table));
}

namespace {

Mask image_bits(const Mapping& f, Mask x) {
  Mask out = 0;
  for_each_bit(x, [&](std::size_t i) { out |= Mask{1} << f.table()[i]; });
  return out;
}

bool is_definable(std::span<const Mask> members, Mask y) {
  return kernel::lower(members, y) == y;
}

void require_endpoints(const Mapping& f, const ApproxSpace& src, const ApproxSpace& dst) {
  require_same_universe(f.source(), src.universe());
  require_same_universe(f.target(), dst.universe());
}

}  // namespace

Subset image(const Mapping& f, const Subset& x) {
  require_same_universe(f.source(), x.universe());
  return Subset(f.target(), image_bits(f, x.bits()));
}

Subset preimage(const Mapping& f, const Subset& y) {
  require_same_universe(f.target(), y.universe());
  Mask out = 0;
  for (std::size_t x = 0; x < f.table().size(); ++x) {
    if (y.contains(f.table()[x])) out |= Mask{1} << x;
  }
  return Subset(f.source(), out);
}

std::string_view to_string(HomMode mode) noexcept {
  return mode == HomMode::Strict ? "strict" : "definable";
}

bool is_homomorphism(const Mapping& f, const ApproxSpace& src, const ApproxSpace& dst,
                     HomMode mode) {
  require_endpoints(f, src, dst);
  const auto& target = dst.covering();
  for (const Mask c : src.covering().masks()) {
    const Mask y = image_bits(f, c);
    const bool ok = mode == HomMode::Strict ? target.contains(y) : is_definable(target.masks(), y);
    if (!ok) return false;
  }
  return true;
}

bool is_isomorphism(const Mapping& f, const ApproxSpace& src, const ApproxSpace& dst,
                    HomMode mode) {
  require_endpoints(f, src, dst);
  if (!f.is_bijective()) return false;
  return is_homomorphism(f, src, dst, mode) && is_homomorphism(inverse(f), dst, src, mode);
}

PreservationReport preservation_report(const Mapping& f, const ApproxSpace& src,
                                       const ApproxSpace& dst, const Subset& x) {
  if (!is_homomorphism(f, src, dst, HomMode::Definable)) {
    throw Error(ErrorCode::NotAHomomorphism, "mapping does not send members to definable sets");
  }
  const Subset fx = image(f, x);
  PreservationReport r{
      .f_lower_x = image(f, lower(src, x)),
      .lower_f_x = lower(dst, fx),
      .f_upper_x = image(f, upper_neigh(src, x)),
      .upper_f_x = upper_neigh(dst, fx),
      .lower_inclusion_holds = false,
      .lower_equal = false,
      .upper_equal = false,
      .isomorphism = is_isomorphism(f, src, dst, HomMode::Definable),
      .neighborhoods_transported = std::nullopt,
  };
  r.lower_inclusion_holds = is_subset(r.f_lower_x, r.lower_f_x);
  r.lower_equal = r.f_lower_x == r.lower_f_x;
  r.upper_equal = r.f_upper_x == r.upper_f_x;
  if (r.isomorphism) {
    bool transported = true;
    for (std::size_t i = 0; i < src.universe().size(); ++i) {
      if (image_bits(f, src.neighborhoods()[i]) != dst.neighborhoods()[f(i)]) transported = false;
    }
    r.neighborhoods_transported = transported;
  }
  return r;
}

}  // namespace covrough
