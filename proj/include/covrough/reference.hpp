#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>

#include "covrough/covering.hpp"
#include "covrough/morphisms.hpp"

/// Small hand-specified spaces reused by the law catalog, the tests and the
/// sample data files. Function names follow the law ids that consume them.
namespace covrough::reference {

/// {"x1", ..., "xn"}.
[[nodiscard]] Universe x_universe(std::size_t n, char prefix = 'x');
/// Subset {x_i | i in one_based} of an x_universe.
[[nodiscard]] Mask xs(std::initializer_list<std::size_t> one_based);

/// U = {a,b,c,d}; C = {{a,b}, {a,c}, {b,d}}.
[[nodiscard]] Covering ex1_covering();

/// Two coverings of {x1..x4} sharing the six pairs as reduct.
[[nodiscard]] std::pair<Covering, Covering> ex3_coverings();

/// {C1, C2, C12, C13, C123, C124, C134, C234} over {x1..x4}.
[[nodiscard]] Covering ex4_covering();

/// C1 = {C12, C24, C234}, C2 = {C123, C234} over {x1..x4}.
[[nodiscard]] std::pair<Covering, Covering> ex5_coverings();

/// U = {a,b,c}; C = {{a,b}, {b,c}, {a,c}}.
[[nodiscard]] Covering rmk4_covering();

struct MappingCase {
  ApproxSpace source;
  ApproxSpace target;
  Mapping map;
  Subset x;
};

/// Five-element source, four-element target, a non-injective homomorphism
/// and X = {x2, x4} for which f(X⁺) and f(X)⁺ are incomparable.
[[nodiscard]] MappingCase rmk5_case();

}  // namespace covrough::reference
