#include "covrough/universe.hpp"

#include <bit>
#include <unordered_map>

namespace covrough {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyUniverse: return "EmptyUniverse";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::EmptyName: return "EmptyName";
    case ErrorCode::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::UniverseMismatch: return "UniverseMismatch";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NotACovering: return "NotACovering";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::CoveringTooLarge: return "CoveringTooLarge";
    case ErrorCode::OnlyTrivialSubcovering: return "OnlyTrivialSubcovering";
    case ErrorCode::IncompleteMapping: return "IncompleteMapping";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::OutOfSupportedRange: return "OutOfSupportedRange";
    case ErrorCode::UniverseTooLargeForEnumeration: return "UniverseTooLargeForEnumeration";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ScopeTooLarge: return "ScopeTooLarge";
    case ErrorCode::UnknownLaw: return "UnknownLaw";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

struct Universe::Impl {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
};

Universe::Universe(std::vector<std::string> names) {
  if (names.empty()) {
    throw Error(ErrorCode::EmptyUniverse, "a universe needs at least one element");
  }
  if (names.size() > kMaxUniverseSize) {
    throw Error(ErrorCode::UniverseTooLarge,
                std::to_string(names.size()) + " elements (limit " +
                    std::to_string(kMaxUniverseSize) + ")");
  }
  auto impl = std::make_shared<Impl>();
  impl->index.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) {
      throw Error(ErrorCode::EmptyName, "element " + std::to_string(i) + " has an empty name");
    }
    if (!impl->index.emplace(names[i], i).second) {
      throw Error(ErrorCode::DuplicateName, "'" + names[i] + "'");
    }
  }
  impl->names = std::move(names);
  impl_ = std::move(impl);
}

Universe make_universe(std::vector<std::string> names) { return Universe(std::move(names)); }

std::size_t Universe::size() const noexcept { return impl_->names.size(); }

const std::string& Universe::name(std::size_t index) const {
  if (index >= size()) {
    throw Error(ErrorCode::UnknownElement, "index " + std::to_string(index));
  }
  return impl_->names[index];
}

const std::vector<std::string>& Universe::names() const noexcept { return impl_->names; }

std::optional<std::size_t> Universe::find(std::string_view label) const {
  const auto it = impl_->index.find(std::string(label));
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Universe::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorCode::UnknownLabel, "'" + std::string(label) + "'");
}

Subset Universe::empty() const { return Subset(*this, 0); }
Subset Universe::full() const { return Subset(*this, full_bits()); }

Subset Universe::singleton(std::size_t index) const {
  if (index >= size()) {
    throw Error(ErrorCode::UnknownElement, "index " + std::to_string(index));
  }
  return Subset(*this, Mask{1} << index);
}

Subset Universe::from_bits(Mask bits) const {
  if (!mask_subset(bits, full_bits())) {
    throw Error(ErrorCode::UnknownElement, "bit pattern exceeds universe of size " +
                                               std::to_string(size()));
  }
  return Subset(*this, bits);
}

Subset Universe::subset(std::span<const std::string> labels) const {
  Mask bits = 0;
  for (const auto& label : labels) bits |= Mask{1} << index_of(label);
  return Subset(*this, bits);
}

Subset Universe::subset(std::initializer_list<std::string_view> labels) const {
  Mask bits = 0;
  for (const auto label : labels) bits |= Mask{1} << index_of(label);
  return Subset(*this, bits);
}

bool operator==(const Universe& a, const Universe& b) noexcept {
  return a.impl_ == b.impl_ || a.impl_->names == b.impl_->names;
}

std::size_t Subset::count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<std::size_t> Subset::indices() const {
  std::vector<std::size_t> out;
  for_each_bit(bits_, [&](std::size_t i) { out.push_back(i); });
  return out;
}

std::vector<std::string> Subset::members() const {
  std::vector<std::string> out;
  for_each_bit(bits_, [&](std::size_t i) { out.push_back(universe_.name(i)); });
  return out;
}

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each_bit(bits_, [&](std::size_t i) {
    if (!first) out += ", ";
    out += universe_.name(i);
    first = false;
  });
  return out + "}";
}

void require_same_universe(const Universe& a, const Universe& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::UniverseMismatch, "operands belong to different universes");
  }
}

Subset set_union(const Subset& a, const Subset& b) {
  require_same_universe(a.universe(), b.universe());
  return Subset(a.universe(), a.bits() | b.bits());
}

Subset set_intersect(const Subset& a, const Subset& b) {
  require_same_universe(a.universe(), b.universe());
  return Subset(a.universe(), a.bits() & b.bits());
}

Subset set_difference(const Subset& a, const Subset& b) {
  require_same_universe(a.universe(), b.universe());
  return Subset(a.universe(), a.bits() & ~b.bits());
}

Subset complement(const Subset& a) {
  return Subset(a.universe(), ~a.bits() & a.universe().full_bits());
}

bool is_subset(const Subset& a, const Subset& b) {
  require_same_universe(a.universe(), b.universe());
  return mask_subset(a.bits(), b.bits());
}

}  // namespace covrough
