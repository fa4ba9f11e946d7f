#include "covrough/enumeration.hpp"

namespace covrough {

BigInt count_coverings(std::size_t n) {
  if (n < 1 || n > kMaxCountN) {
    throw Error(ErrorCode::OutOfSupportedRange,
                "covering count supported for 1 <= n <= " + std::to_string(kMaxCountN));
  }
  BigInt sum = 0;
  BigInt binom = 1;  // C(n, k)
  for (std::size_t k = 0; k <= n; ++k) {
    const BigInt term = binom * (BigInt(1) << (std::size_t{1} << (n - k)));
    sum += (k % 2 == 0) ? term : BigInt(-term);
    binom = binom * (n - k) / (k + 1);
  }
  if ((sum & 1) != 0) {
    throw Error(ErrorCode::OutOfSupportedRange, "alternating sum is odd");
  }
  return sum / 2;
}

CoveringStream::CoveringStream(Universe universe) : universe_(std::move(universe)) {
  const std::size_t n = universe_.size();
  if (n > kMaxEnumerationN) {
    throw Error(ErrorCode::UniverseTooLargeForEnumeration,
                "enumeration supports at most " + std::to_string(kMaxEnumerationN) + " elements");
  }
  const std::size_t candidates = (std::size_t{1} << n) - 1;
  end_ = std::uint64_t{1} << candidates;
}

std::optional<Covering> CoveringStream::next() {
  const Mask full = universe_.full_bits();
  while (cursor_ < end_) {
    const std::uint64_t family = cursor_++;
    Mask covered = 0;
    for_each_bit(family, [&](std::size_t bit) { covered |= static_cast<Mask>(bit + 1); });
    if (covered != full) continue;
    std::vector<Mask> members;
    for_each_bit(family, [&](std::size_t bit) { members.push_back(static_cast<Mask>(bit + 1)); });
    last_ = family;
    return Covering(universe_, std::move(members));
  }
  return std::nullopt;
}

CoveringStream enumerate_coverings(const Universe& universe) { return CoveringStream(universe); }

std::vector<Covering> all_coverings(const Universe& universe) {
  std::vector<Covering> out;
  auto stream = enumerate_coverings(universe);
  while (auto c = stream.next()) out.push_back(std::move(*c));
  return out;
}

std::vector<Covering> all_partitions(const Universe& universe) {
  const std::size_t n = universe.size();
  if (n > 10) {
    throw Error(ErrorCode::OutOfSupportedRange, "partition enumeration supports at most 10 elements");
  }
  std::vector<Covering> out;
  // growth[i] <= 1 + max(growth[0..i-1]); growth[0] = 0.
  std::vector<std::size_t> growth(n, 0);
  while (true) {
    std::vector<Mask> blocks;
    for (std::size_t i = 0; i < n; ++i) {
      if (growth[i] >= blocks.size()) blocks.resize(growth[i] + 1, 0);
      blocks[growth[i]] |= Mask{1} << i;
    }
    out.emplace_back(universe, std::move(blocks));

    std::size_t i = n;
    while (i-- > 1) {
      std::size_t prefix_max = 0;
      for (std::size_t j = 0; j < i; ++j) prefix_max = std::max(prefix_max, growth[j]);
      if (growth[i] <= prefix_max) {
        ++growth[i];
        for (std::size_t j = i + 1; j < n; ++j) growth[j] = 0;
        break;
      }
    }
    if (i == 0) break;
  }
  return out;
}

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::InvalidArgument, "empty range");
  const std::uint64_t limit = (~std::uint64_t{0}) - ((~std::uint64_t{0}) % bound);
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return v % bound;
}

double SeededRng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::vector<std::size_t> SeededRng::permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    std::swap(p[i - 1], p[below(i)]);
  }
  return p;
}

Covering random_covering(const Universe& universe, std::uint64_t seed, double density) {
  if (!(density > 0.0 && density <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "density must lie in (0, 1]");
  }
  const std::size_t n = universe.size();
  SeededRng rng(seed);
  std::vector<Mask> members;
  if (n <= kMaxEnumerationN) {
    for (Mask s = 1; s <= universe.full_bits(); ++s) {
      if (rng.chance(density)) members.push_back(s);
    }
  } else {
    const std::uint64_t draws = 1 + rng.below((n + 1) / 2);
    for (std::uint64_t d = 0; d < draws; ++d) {
      Mask m = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if (rng.chance(density)) m |= Mask{1} << x;
      }
      if (m == 0) m = Mask{1} << rng.below(n);
      members.push_back(m);
    }
  }
  Mask covered = 0;
  for (const Mask m : members) covered |= m;
  for (std::size_t x = 0; x < n; ++x) {
    const Mask bit = Mask{1} << x;
    if ((covered & bit) != 0) continue;
    const Mask m = rng.bits(n) | bit;
    members.push_back(m);
    covered |= m;
  }
  return Covering(universe, std::move(members));
}

Covering random_partition(const Universe& universe, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<Mask> blocks;
  for (std::size_t x = 0; x < universe.size(); ++x) {
    const std::size_t b = rng.below(blocks.size() + 1);
    if (b == blocks.size()) blocks.push_back(0);
    blocks[b] |= Mask{1} << x;
  }
  return Covering(universe, std::move(blocks));
}

}  // namespace covrough
