#include "covrough/reference.hpp"

namespace covrough::reference {

Universe x_universe(std::size_t n, char prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::string(1, prefix) + std::to_string(i));
  return Universe(std::move(names));
}

Mask xs(std::initializer_list<std::size_t> one_based) {
  Mask m = 0;
  for (const std::size_t i : one_based) m |= Mask{1} << (i - 1);
  return m;
}

Covering ex1_covering() {
  const Universe u({"a", "b", "c", "d"});
  return make_covering(u, {{"a", "b"}, {"a", "c"}, {"b", "d"}});
}

namespace {

std::vector<Mask> all_pairs_of_four() {
  return {xs({1, 2}), xs({1, 3}), xs({1, 4}), xs({2, 3}), xs({2, 4}), xs({3, 4})};
}

}  // namespace

std::pair<Covering, Covering> ex3_coverings() {
  const Universe u = x_universe(4);
  auto first = all_pairs_of_four();
  first.push_back(xs({1, 2, 3}));
  first.push_back(xs({1, 2, 4}));
  auto second = all_pairs_of_four();
  second.push_back(xs({1, 2, 3}));
  second.push_back(xs({1, 3, 4}));
  second.push_back(xs({2, 3, 4}));
  return {Covering(u, std::move(first)), Covering(u, std::move(second))};
}

Covering ex4_covering() {
  return Covering(x_universe(4), {xs({1}), xs({2}), xs({1, 2}), xs({1, 3}), xs({1, 2, 3}),
                                  xs({1, 2, 4}), xs({1, 3, 4}), xs({2, 3, 4})});
}

std::pair<Covering, Covering> ex5_coverings() {
  const Universe u = x_universe(4);
  return {Covering(u, {xs({1, 2}), xs({2, 4}), xs({2, 3, 4})}),
          Covering(u, {xs({1, 2, 3}), xs({2, 3, 4})})};
}

Covering rmk4_covering() {
  const Universe u({"a", "b", "c"});
  return make_covering(u, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

MappingCase rmk5_case() {
  const Universe u = x_universe(5, 'x');
  const Universe v = x_universe(4, 'y');
  ApproxSpace source(Covering(u, {xs({1, 2}), xs({2, 3}), xs({4, 5})}));
  ApproxSpace target(Covering(v, {xs({1, 2}), xs({3}), xs({4})}));
  Mapping f(u, v, {0, 1, 0, 2, 3});
  return {std::move(source), std::move(target), std::move(f), u.from_bits(xs({2, 4}))};
}

}  // namespace covrough::reference
