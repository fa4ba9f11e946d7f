#pragma once

// Slow, literal reference implementations over std::set. Nothing here shares
// code with the bitmask kernels under test.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "covrough/covering.hpp"

namespace oracle {

using Set = std::set<std::size_t>;
using Family = std::vector<Set>;

inline Set to_set(covrough::Mask m) {
  Set s;
  for (std::size_t i = 0; i < 64; ++i) {
    if ((m >> i) & 1U) s.insert(i);
  }
  return s;
}

inline covrough::Mask to_mask(const Set& s) {
  covrough::Mask m = 0;
  for (auto i : s) m |= covrough::Mask{1} << i;
  return m;
}

inline Family to_family(const covrough::Covering& c) {
  Family f;
  for (auto m : c.masks()) f.push_back(to_set(m));
  return f;
}

inline Set universe_set(std::size_t n) {
  Set s;
  for (std::size_t i = 0; i < n; ++i) s.insert(i);
  return s;
}

inline bool includes(const Set& big, const Set& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline Set unite(const Set& a, const Set& b) {
  Set out = a;
  out.insert(b.begin(), b.end());
  return out;
}

inline Set meet(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline Set neighborhood(const Family& f, std::size_t n, std::size_t x) {
  Set out = universe_set(n);
  for (const auto& k : f) {
    if (k.count(x)) out = meet(out, k);
  }
  return out;
}

inline Set lower(const Family& f, const Set& x) {
  Set out;
  for (const auto& k : f) {
    if (includes(x, k)) out = unite(out, k);
  }
  return out;
}

// Intersection, over every sub-family whose union contains X, of that union.
// The empty sub-family counts, so the empty set maps to itself.
inline Set upper_by_subfamilies(const Family& f, std::size_t n, const Set& x) {
  Set out = universe_set(n);
  const std::size_t k = f.size();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
    Set u;
    for (std::size_t i = 0; i < k; ++i) {
      if ((pick >> i) & 1U) u = unite(u, f[i]);
    }
    if (includes(u, x)) out = meet(out, u);
  }
  return out;
}

// Reducible: equal to the union of the other members it contains.
inline bool reducible(const Family& f, std::size_t i) {
  Set u;
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (j != i && includes(f[i], f[j])) u = unite(u, f[j]);
  }
  return u == f[i];
}

// Intersectional: equal to the intersection of the other members containing it.
inline bool intersectional(const Family& f, std::size_t n, std::size_t i) {
  Set m = universe_set(n);
  bool any = false;
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (j != i && includes(f[j], f[i])) {
      m = meet(m, f[j]);
      any = true;
    }
  }
  return any && m == f[i];
}

inline std::set<Set> as_set_of_sets(const Family& f) { return {f.begin(), f.end()}; }

// Counts families of nonempty subsets of an n-set whose union is everything.
inline std::uint64_t count_coverings_brute(std::size_t n) {
  const std::uint64_t subsets = (std::uint64_t{1} << n) - 1;  // nonempty ones
  const covrough::Mask full = (covrough::Mask{1} << n) - 1;
  std::uint64_t count = 0;
  for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << subsets); ++fam) {
    covrough::Mask u = 0;
    for (std::uint64_t s = 0; s < subsets; ++s) {
      if ((fam >> s) & 1U) u |= s + 1;
    }
    if (u == full) ++count;
  }
  return count;
}

}  // namespace oracle
