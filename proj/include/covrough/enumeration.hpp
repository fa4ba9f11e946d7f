#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "covrough/covering.hpp"

namespace covrough {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kMaxCountN = 6;
inline constexpr std::size_t kMaxEnumerationN = 4;

/// |Cov(U)| for |U| = n, by the alternating binomial sum
///   1/2 * sum_{k=0..n} (-1)^k C(n,k) 2^(2^(n-k))
/// in exact integer arithmetic. Throws OutOfSupportedRange outside 1..6.
[[nodiscard]] BigInt count_coverings(std::size_t n);

/// Lazily yields every covering of a universe exactly once. Candidate
/// families are visited by ascending mask over the 2^n - 1 nonempty subsets
/// (bit s-1 stands for the subset whose bit pattern is s), so the candidate
/// index of a covering is stable across runs.
class CoveringStream {
 public:
  /// Throws UniverseTooLargeForEnumeration for n > 4.
  explicit CoveringStream(Universe universe);

  [[nodiscard]] std::optional<Covering> next();
  /// Candidate-family index of the covering most recently returned.
  [[nodiscard]] std::uint64_t candidate_index() const noexcept { return last_; }
  [[nodiscard]] const Universe& universe() const noexcept { return universe_; }

 private:
  Universe universe_;
  std::uint64_t cursor_ = 1;
  std::uint64_t end_;
  std::uint64_t last_ = 0;
};

[[nodiscard]] CoveringStream enumerate_coverings(const Universe& universe);
/// Materializes the whole stream.
[[nodiscard]] std::vector<Covering> all_coverings(const Universe& universe);

/// Every partition of the universe (blocks as a covering), generated from
/// restricted growth strings. Throws OutOfSupportedRange above 10 elements.
[[nodiscard]] std::vector<Covering> all_partitions(const Universe& universe);

/// Deterministic generator on top of std::mt19937_64, whose output sequence
/// is fixed by the standard. Distributions are implemented here rather than
/// taken from <random>, since those differ between standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  [[nodiscard]] std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound must be positive.
  [[nodiscard]] std::uint64_t below(std::uint64_t bound);
  /// Uniform in [0, 1) with 53 bits of resolution.
  [[nodiscard]] double unit();
  [[nodiscard]] bool chance(double p) { return unit() < p; }
  /// Uniform random subset of the low n bits.
  [[nodiscard]] Mask bits(std::size_t n) { return next() & full_mask(n); }
  /// Fisher-Yates shuffle of 0..n-1.
  [[nodiscard]] std::vector<std::size_t> permutation(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

/// Seeded random covering.
///  - n <= 4: every nonempty subset is kept independently with probability
///    `density`.
///  - n > 4: 1 + below(ceil(n/2)) random sets are drawn, each element kept
///    with probability `density` (an empty draw becomes a random singleton).
/// Afterwards each still-uncovered element x, in index order, gets a random
/// set containing x. Same (universe size, seed, density) gives the same
/// covering. Throws InvalidArgument unless 0 < density <= 1.
[[nodiscard]] Covering random_covering(const Universe& universe, std::uint64_t seed,
                                       double density);

/// Seeded random partition (each element picks a block among the blocks so far
/// plus a fresh one).
[[nodiscard]] Covering random_partition(const Universe& universe, std::uint64_t seed);

}  // namespace covrough
