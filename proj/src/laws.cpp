#include "covrough/laws.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "covrough/approximation.hpp"
#include "covrough/covering_ops.hpp"
#include "covrough/enumeration.hpp"
#include "covrough/io.hpp"
#include "covrough/morphisms.hpp"
#include "covrough/reference.hpp"

namespace covrough::laws {

using nlohmann::json;

namespace {

// One unit of work for a law: the coverings (and mapping) it talks about plus
// the subsets to test. An empty `sets` means every subset of the first
// covering's universe.
struct Instance {
  std::string tag;
  std::vector<Covering> coverings;
  std::vector<Mask> sets;
  std::optional<Mapping> mapping;
};

using Verdict = std::optional<std::string>;
using Sink = std::function<bool(Instance)>;
using Generator = void (*)(const ScopeSpec&, const Sink&);
using Check = Verdict (*)(const Instance&, const Operators&);
using ScopeText = std::string (*)(const ScopeSpec&);

// ---------------------------------------------------------------------------
// Instance plumbing

const Universe& xu(std::size_t n) {
  static const std::vector<Universe> cache = [] {
    std::vector<Universe> v;
    for (std::size_t i = 1; i <= kMaxScopeN; ++i) v.push_back(reference::x_universe(i));
    return v;
  }();
  return cache.at(n - 1);
}

const Universe& yu(std::size_t n) {
  static const std::vector<Universe> cache = [] {
    std::vector<Universe> v;
    for (std::size_t i = 1; i <= kMaxScopeN; ++i) v.push_back(reference::x_universe(i, 'y'));
    return v;
  }();
  return cache.at(n - 1);
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  // splitmix64 finalizer over a combined key
  std::uint64_t z = a * 0x9E3779B97F4A7C15ULL + b + 0x632BE59BD9B4E019ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::array<double, 4> kDensities{0.2, 0.35, 0.5, 0.75};

Covering sampled_covering(const Universe& u, std::uint64_t stream, std::uint64_t s) {
  return random_covering(u, mix(mix(u.size(), stream), s), kDensities[s % kDensities.size()]);
}

std::vector<Mask> sampled_sets(std::size_t n, std::uint64_t stream, std::uint64_t s,
                               std::size_t count) {
  SeededRng rng(mix(mix(n, stream ^ 0xA5A5A5A5ULL), s));
  std::vector<Mask> out(count);
  for (auto& m : out) m = rng.bits(n);
  return out;
}

std::size_t exhaustive_single_n(const ScopeSpec& s) { return std::min<std::size_t>(s.max_n, 4); }
std::size_t exhaustive_pair_n(const ScopeSpec& s) { return std::min<std::size_t>(s.max_n, 3); }

std::string show(const Universe& u, Mask m) { return Subset(u, m).to_string(); }

// Calls fn(X) for each subset under test; stops at the first verdict.
template <typename Fn>
Verdict for_each_set(const Instance& in, const Universe& u, Fn&& fn) {
  if (in.sets.empty()) {
    const Mask full = u.full_bits();
    for (Mask x = 0;; ++x) {
      if (auto v = fn(x)) return v;
      if (x == full) break;
    }
    return std::nullopt;
  }
  for (const Mask x : in.sets) {
    if (auto v = fn(x)) return v;
  }
  return std::nullopt;
}

json instance_to_json(const Instance& in) {
  json j;
  j["tag"] = in.tag;
  j["spaces"] = json::array();
  for (const auto& c : in.coverings) j["spaces"].push_back(io::to_json(c));
  if (!in.sets.empty()) {
    const Universe& u = in.coverings.front().universe();
    j["sets"] = json::array();
    for (const Mask m : in.sets) j["sets"].push_back(Subset(u, m).members());
  }
  if (in.mapping) j["map"] = io::to_json(*in.mapping).at("map");
  return j;
}

Instance instance_from_json(const json& j) {
  Instance in;
  in.tag = j.value("tag", std::string{});
  if (!j.contains("spaces") || !j.at("spaces").is_array() || j.at("spaces").empty()) {
    throw Error(ErrorCode::ParseError, "witness needs a nonempty \"spaces\" array");
  }
  for (const auto& s : j.at("spaces")) in.coverings.push_back(io::covering_from_json(s));
  const Universe& u = in.coverings.front().universe();
  if (j.contains("sets")) {
    for (const auto& s : j.at("sets")) in.sets.push_back(io::subset_from_json(u, s).bits());
  }
  if (j.contains("map")) {
    if (in.coverings.size() < 2) throw Error(ErrorCode::ParseError, "mapping witness needs two spaces");
    in.mapping = io::mapping_from_json(u, in.coverings[1].universe(), json{{"map", j.at("map")}});
  }
  return in;
}

// ---------------------------------------------------------------------------
// Generators

void gen_single(const ScopeSpec& scope, const Sink& sink) {
  for (std::size_t n = 1; n <= exhaustive_single_n(scope); ++n) {
    auto stream = enumerate_coverings(xu(n));
    while (auto c = stream.next()) {
      if (!sink(Instance{"exhaustive", {std::move(*c)}, {}, std::nullopt})) return;
    }
  }
  for (std::size_t n = 5; n <= scope.max_n; ++n) {
    for (std::uint64_t s = 0; s < scope.seeds; ++s) {
      Instance in{"sampled", {sampled_covering(xu(n), 1, s)}, sampled_sets(n, 1, s, scope.sample_sets),
                  std::nullopt};
      if (!sink(std::move(in))) return;
    }
  }
}

void pairs_up_to(std::size_t max_n, const Sink& sink, bool& stop) {
  for (std::size_t n = 1; n <= max_n && !stop; ++n) {
    const auto all = all_coverings(xu(n));
    for (const auto& a : all) {
      for (const auto& b : all) {
        if (!sink(Instance{"exhaustive", {a, b}, {}, std::nullopt})) {
          stop = true;
          return;
        }
      }
    }
  }
}

void gen_pairs(const ScopeSpec& scope, const Sink& sink) {
  bool stop = false;
  pairs_up_to(exhaustive_pair_n(scope), sink, stop);
  for (std::size_t n = 4; n <= scope.max_n && !stop; ++n) {
    for (std::uint64_t s = 0; s < scope.pair_seeds; ++s) {
      Instance in{"sampled",
                  {sampled_covering(xu(n), 2, 2 * s), sampled_covering(xu(n), 2, 2 * s + 1)},
                  n <= 4 ? std::vector<Mask>{} : sampled_sets(n, 2, s, scope.sample_sets),
                  std::nullopt};
      if (!sink(std::move(in))) return;
    }
  }
}

// The converse search always covers n <= 3: smaller universes hold no
// witness, so capping it with max_n would make the law unsatisfiable.
void gen_converse(const ScopeSpec&, const Sink& sink) {
  bool stop = false;
  pairs_up_to(3, sink, stop);
}

void gen_partitions(const ScopeSpec& scope, const Sink& sink) {
  for (std::size_t n = 1; n <= exhaustive_single_n(scope); ++n) {
    for (auto& p : all_partitions(xu(n))) {
      if (!sink(Instance{"exhaustive", {std::move(p)}, {}, std::nullopt})) return;
    }
  }
  for (std::size_t n = 5; n <= scope.max_n; ++n) {
    for (std::uint64_t s = 0; s < scope.seeds; ++s) {
      Instance in{"sampled", {random_partition(xu(n), mix(mix(n, 3), s))},
                  sampled_sets(n, 3, s, scope.sample_sets), std::nullopt};
      if (!sink(std::move(in))) return;
    }
  }
}

void gen_count(const ScopeSpec& scope, const Sink& sink) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const bool enumerate = n <= exhaustive_single_n(scope);
    Instance in{enumerate ? "formula+enumeration" : "formula",
                {Covering(xu(n), {xu(n).full_bits()})}, {}, std::nullopt};
    if (!sink(std::move(in))) return;
  }
}

std::vector<Mapping> all_maps(const Universe& u, const Universe& v) {
  std::vector<Mapping> out;
  const std::size_t n = u.size();
  const std::size_t m = v.size();
  std::vector<std::size_t> table(n, 0);
  while (true) {
    out.emplace_back(u, v, table);
    std::size_t i = 0;
    while (i < n && ++table[i] == m) table[i++] = 0;
    if (i == n) break;
  }
  return out;
}

// Covering pairs over a three-element source and target (smaller when max_n
// is below 3) crossed with every mapping between them.
template <typename Fn>
bool for_each_small_hom_case(const ScopeSpec& scope, Fn&& fn) {
  const std::size_t n = std::min<std::size_t>(scope.max_n, 3);
  const auto maps = all_maps(xu(n), yu(n));
  for (std::uint64_t s = 0; s < scope.pair_seeds; ++s) {
    const Covering src = sampled_covering(xu(n), 4, 2 * s);
    const Covering dst = sampled_covering(yu(n), 4, 2 * s + 1);
    for (const auto& f : maps) {
      if (!fn(src, dst, f)) return false;
    }
  }
  return true;
}

void gen_hom(const ScopeSpec& scope, const Sink& sink) {
  const bool more = for_each_small_hom_case(scope, [&](const Covering& src, const Covering& dst,
                                                      const Mapping& f) {
    return sink(Instance{"mapping", {src, dst}, {}, f});
  });
  if (!more) return;
  auto r = reference::rmk5_case();
  sink(Instance{"reference", {r.source.covering(), r.target.covering()}, {}, r.map});
}

// Relabels a random covering by a random permutation and replaces the image
// by a covering with the same reduct, which keeps the identity-on-labels
// correspondence a (definable) isomorphism.
void gen_iso(const ScopeSpec& scope, const Sink& sink) {
  const std::size_t top = std::min<std::size_t>(scope.max_n, 6);
  for (std::uint64_t s = 0; s < scope.seeds; ++s) {
    const std::size_t n = 1 + s % top;
    const Covering c = sampled_covering(xu(n), 5, s);
    SeededRng rng(mix(mix(n, 6), s));
    const auto perm = rng.permutation(n);
    std::vector<Mask> moved;
    for (const Mask m : c.masks()) {
      Mask out = 0;
      for_each_bit(m, [&](std::size_t i) { out |= Mask{1} << perm[i]; });
      moved.push_back(out);
    }
    Covering d(yu(n), std::move(moved));
    switch (rng.below(3)) {
      case 0: break;
      case 1: d = reduct(d); break;
      default: d = definable_closure(d); break;
    }
    Instance in{"constructed", {c, std::move(d)}, sampled_sets(n, 6, s, scope.sample_sets),
                Mapping(xu(n), yu(n), perm)};
    if (!sink(std::move(in))) return;
  }
  for_each_small_hom_case(scope, [&](const Covering& src, const Covering& dst, const Mapping& f) {
    if (!f.is_bijective()) return true;
    if (!is_isomorphism(f, ApproxSpace(src), ApproxSpace(dst))) return true;
    return sink(Instance{"found", {src, dst}, {}, f});
  });
}

void gen_ex6(const ScopeSpec& scope, const Sink& sink) {
  for (std::size_t n = 1; n <= exhaustive_pair_n(scope); ++n) {
    auto stream = enumerate_coverings(xu(n));
    while (auto c = stream.next()) {
      if (!sink(Instance{"all", {std::move(*c)}, {}, std::nullopt})) return;
    }
  }
  if (!sink(Instance{"nei-not-back", {reference::rmk4_covering()}, {}, std::nullopt})) return;
  sink(Instance{"int-not-forward", {reference::ex4_covering()}, {}, std::nullopt});
}

template <auto Make>
void gen_fixed(const ScopeSpec&, const Sink& sink) {
  sink(Make());
}

Instance ex1_instance() {
  const Covering c = reference::ex1_covering();
  return Instance{"reference", {c}, {c.universe().subset({"a", "d"}).bits()}, std::nullopt};
}

Instance ex3_instance() {
  auto [a, b] = reference::ex3_coverings();
  return Instance{"reference", {a, b}, {}, std::nullopt};
}

Instance ex4_instance() { return Instance{"reference", {reference::ex4_covering()}, {}, std::nullopt}; }

Instance ex5_instance() {
  auto [a, b] = reference::ex5_coverings();
  return Instance{"reference", {a, b}, {reference::xs({2, 3})}, std::nullopt};
}

Instance rmk2_instance() {
  return Instance{"reference", {reference::ex4_covering()}, {reference::xs({1})}, std::nullopt};
}

Instance rmk4_instance() {
  const Covering c = reference::rmk4_covering();
  return Instance{"reference", {c}, {c.universe().subset({"a"}).bits()}, std::nullopt};
}

Instance rmk5_instance() {
  auto r = reference::rmk5_case();
  return Instance{"reference", {r.source.covering(), r.target.covering()}, {r.x.bits()}, r.map};
}

// ---------------------------------------------------------------------------
// Checks

std::string lower_text(const Universe& u, Mask x) { return "X=" + show(u, x); }

Verdict check_thm1(const Instance& in, const Operators&) {
  const ApproxSpace sp(in.coverings[0]);
  const Universe& u = sp.universe();
  return for_each_set(in, u, [&](Mask x) -> Verdict {
    const Subset xs(u, x);
    const Subset a = upper_def3(sp, xs);
    const Subset b = upper_neigh(sp, xs);
    const Subset c = upper_subcov(sp, xs);
    if (a == b && b == c) return std::nullopt;
    return lower_text(u, x) + ": def3 " + a.to_string() + ", neighborhoods " + b.to_string() +
           ", subcoverings " + c.to_string();
  });
}

Verdict check_cor1(const Instance& in, const Operators&) {
  const ApproxSpace sp(in.coverings[0]);
  const Universe& u = sp.universe();
  return for_each_set(in, u, [&](Mask x) -> Verdict {
    const Subset xs(u, x);
    Subset nontrivial = u.empty();
    try {
      nontrivial = upper_subcov_nontrivial(sp, xs);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::OnlyTrivialSubcovering) throw;
      if (subcoverings(sp, xs).members.size() != 1) {
        return lower_text(u, x) + ": reported only-trivial but several subcoverings exist";
      }
      return std::nullopt;
    }
    const Subset full = upper_subcov(sp, xs);
    if (nontrivial == full) return std::nullopt;
    return lower_text(u, x) + ": without the full covering " + nontrivial.to_string() +
           ", with it " + full.to_string();
  });
}

Verdict check_lem1(const Instance& in, const Operators&) {
  const ApproxSpace sp(in.coverings[0]);
  const Universe& u = sp.universe();
  return for_each_set(in, u, [&](Mask x) -> Verdict {
    const Subset xs(u, x);
    const Subset a = upper_def3(sp, xs);
    const Subset b = upper_neigh(sp, xs);
    if (a == b) return std::nullopt;
    return lower_text(u, x) + ": def3 " + a.to_string() + " vs union of neighborhoods " + b.to_string();
  });
}

Verdict check_lem2(const Instance& in, const Operators& ops) {
  const Covering& c = in.coverings[0];
  const NeighborhoodTable a(c);
  const NeighborhoodTable b(ops.int_op(c));
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x] != b[x]) {
      return "N(" + c.universe().name(x) + ") is " + show(c.universe(), a[x]) + " but " +
             show(c.universe(), b[x]) + " after int";
    }
  }
  return std::nullopt;
}

// lower under `weaker` must be inside lower under `stronger`; uppers equal.
Verdict compare_lower_inclusion_upper_equal(const Instance& in, const Covering& weaker,
                                            const Covering& stronger, const char* what) {
  const ApproxSpace w(weaker);
  const ApproxSpace s(stronger);
  const Universe& u = w.universe();
  return for_each_set(in, u, [&](Mask x) -> Verdict {
    const Mask lw = kernel::lower(weaker.masks(), x);
    const Mask ls = kernel::lower(stronger.masks(), x);
    if (!mask_subset(lw, ls)) {
      return lower_text(u, x) + ": lower inclusion fails for " + what + " (" + show(u, lw) +
             " not within " + show(u, ls) + ")";
    }
    const Mask uw = kernel::upper(w.neighborhoods(), x);
    const Mask us = kernel::upper(s.neighborhoods(), x);
    if (uw != us) {
      return lower_text(u, x) + ": uppers differ for " + what + " (" + show(u, uw) + " vs " +
             show(u, us) + ")";
    }
    return std::nullopt;
  });
}

Verdict check_thm2(const Instance& in, const Operators& ops) {
  const Covering& c = in.coverings[0];
  return compare_lower_inclusion_upper_equal(in, ops.int_op(c), c, "int(C) vs C");
}

Verdict check_thm4(const Instance& in, const Operators& ops) {
  const Covering& c = in.coverings[0];
  return compare_lower_inclusion_upper_equal(in, c, ops.nei(c), "C vs nei(C)");
}

Verdict check_sandwich(const Instance& in, const Operators&) {
  const ApproxSpace sp(in.coverings[0]);
  const Universe& u = sp.universe();
  for (const Mask m : sp.covering().masks()) {
    if (kernel::lower(sp.covering().masks(), m) != m) {
      return "member " + show(u, m) + " is not its own lower approximation";
    }
  }
  return for_each_set(in, u, [&](Mask x) -> Verdict {
    const Subset xs(u, x);
    const Subset lo = lower(sp, xs);
    const Subset up = upper_neigh(sp, xs);
    const Subset up3 = upper_def3(sp, xs);
    if (is_subset(lo, xs) && is_subset(xs, up) && is_subset(xs, up3)) return std::nullopt;
    return lower_text(u, x) + ": lower " + lo.to_string() + ", upper " + up.to_string();
  });
}

Verdict check_monotone(const Instance& in, const Operators&) {
  const ApproxSpace sp(in.coverings[0]);
  const Universe& u = sp.universe();
  const auto members = sp.covering().masks();
  const auto test = [&](Mask x, Mask y) -> Verdict {
    const bool lo = mask_subset(kernel::lower(members, x), kernel::lower(members, y));
    const bool up = mask_subset(kernel::upper(sp.neighborhoods(), x), kernel::upper(sp.neighborhoods(), y));
    if (lo && up) return std::nullopt;
    return "X=" + show(u, x) + " within Y=" + show(u, y) + " but " + (lo ? "upper" : "lower") +
           " is not monotone";
  };
  if (in.sets.empty()) {
    const Mask full = u.full_bits();
    for (Mask y = 0;; ++y) {
      for (Mask x = y;; x = (x - 1) & y) {
        if (auto v = test(x, y)) return v;
        if (x == 0) break;
      }
      if (y == full) break;
    }
    return std::nullopt;
  }
  for (std::size_t i = 0; i < in.sets.size(); ++i) {
    const Mask x = in.sets[i];
    const Mask y = x | in.sets[(i + 1) % in.sets.size()];
    if (auto v = test(x, y)) return v;
  }
  return std::nullopt;
}

// Classical approximations from block labels, without going through masks of
// covering members.
std::pair<Mask, Mask> pawlak(const Covering& partition, Mask x) {
  const std::size_t n = partition.universe().size();
  std::vector<std::size_t> block(n, 0);
  const auto members = partition.masks();
  for (std::size_t b = 0; b < members.size(); ++b) {
    for (std::size_t e = 0; e < n; ++e) {
      if ((members[b] >> e) & 1U) block[e] = b;
    }
  }
  Mask lo = 0;
  Mask up = 0;
  for (std::size_t e = 0; e < n; ++e) {
    bool all_in = true;
    bool any_in = false;
    for (std::size_t y = 0; y < n; ++y) {
      if (block[y] != block[e]) continue;
      const bool in_x = ((x >> y) & 1U) != 0;
      all_in = all_in && in_x;
      any_in = any_in || in_x;
    }
    if (all_in) lo |= Mask{1} << e;
    if (any_in) up |= Mask{1} << e;
  }
  return {lo, up};
}

Verdict check_partition(const Instance& in, const Operators&) {
  const Covering& p = in.coverings[0];
  if (!p.is_partition()) return "instance is not a partition: " + p.to_string();
  const ApproxSpace sp(p);
  const Universe& u = sp.universe();
  return for_each_set(in, u, [&](Mask x) -> Verdict {
    const auto [lo, up] = pawlak(p, x);
    const Subset xs(u, x);
    const Subset l = lower(sp, xs);
    const Subset a = upper_neigh(sp, xs);
    const Subset b = upper_def3(sp, xs);
    if (l.bits() == lo && a.bits() == up && b.bits() == up) return std::nullopt;
    return lower_text(u, x) + ": covering gives " + l.to_string() + "/" + a.to_string() +
           ", classical gives " + show(u, lo) + "/" + show(u, up);
  });
}

Verdict check_idempotence(const Instance& in, const Operators& ops) {
  const Covering& c = in.coverings[0];
  const Covering r = ops.reduct(c);
  if (ops.reduct(r) != r) return "reduct not idempotent: " + r.to_string();
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!is_irreducible(r, i)) return "reduct keeps reducible member " + r.member(i).to_string();
  }
  const Covering t = ops.int_op(c);
  if (ops.int_op(t) != t) return "int not idempotent: " + t.to_string();
  const Covering v = ops.nei(c);
  if (ops.nei(v) != v) return "nei not idempotent: " + v.to_string();
  return std::nullopt;
}

Verdict check_cor4(const Instance& in, const Operators& ops) {
  const Covering& c = in.coverings[0];
  const Covering closure = definable_closure(c);
  if (ops.reduct(closure) != ops.reduct(c)) {
    return "reduct of the closure " + ops.reduct(closure).to_string() + " differs from " +
           ops.reduct(c).to_string();
  }
  const ApproxSpace a(c);
  const ApproxSpace b(closure);
  const Universe& u = a.universe();
  return for_each_set(in, u, [&](Mask x) -> Verdict {
    if (kernel::lower(c.masks(), x) != kernel::lower(closure.masks(), x) ||
        kernel::upper(a.neighborhoods(), x) != kernel::upper(b.neighborhoods(), x)) {
      return lower_text(u, x) + ": approximations change under the definable closure";
    }
    return std::nullopt;
  });
}

Verdict check_cor5(const Instance& in, const Operators& ops) {
  const Covering& c = in.coverings[0];
  const Covering r = ops.reduct(c);
  const ApproxSpace a(c);
  const ApproxSpace b(r);
  if (!is_isomorphism(identity_mapping(c.universe()), a, b)) {
    return "identity is not an isomorphism onto the reduct " + r.to_string();
  }
  const Universe& u = a.universe();
  return for_each_set(in, u, [&](Mask x) -> Verdict {
    if (kernel::lower(c.masks(), x) != kernel::lower(r.masks(), x) ||
        kernel::upper(a.neighborhoods(), x) != kernel::upper(b.neighborhoods(), x)) {
      return lower_text(u, x) + ": approximations change under reduct";
    }
    return std::nullopt;
  });
}

// Pairwise checks --------------------------------------------------------

Verdict check_prop1(const Instance& in, const Operators&) {
  const Covering& a = in.coverings[0];
  const Covering& b = in.coverings[1];
  const bool sl = same_lower_operator_exhaustive(a, b);
  const bool su = same_upper_operator_exhaustive(a, b);
  if (sl && !su) return "equal lower operators but different upper operators";
  if (same_lower_operator(a, b) != sl) return "reduct certificate disagrees with the subset oracle";
  if (same_upper_operator(a, b) != su) return "neighborhood certificate disagrees with the subset oracle";
  return std::nullopt;
}

Verdict check_converse(const Instance& in, const Operators&) {
  const Covering& a = in.coverings[0];
  const Covering& b = in.coverings[1];
  if (same_upper_operator_exhaustive(a, b) && !same_lower_operator_exhaustive(a, b)) {
    const Universe& u = a.universe();
    const Mask full = u.full_bits();
    for (Mask x = 0; x <= full; ++x) {
      const Mask la = kernel::lower(a.masks(), x);
      const Mask lb = kernel::lower(b.masks(), x);
      if (la != lb) {
        return "same upper operator, lower differs at X=" + show(u, x) + ": " + show(u, la) +
               " vs " + show(u, lb);
      }
    }
  }
  return std::nullopt;
}

bool members_agree(const Covering& a, const Covering& b, bool on_lower) {
  const NeighborhoodTable na(a);
  const NeighborhoodTable nb(b);
  for (const auto* family : {&a, &b}) {
    for (const Mask m : family->masks()) {
      const bool same = on_lower ? kernel::lower(a.masks(), m) == kernel::lower(b.masks(), m)
                                 : kernel::upper(na, m) == kernel::upper(nb, m);
      if (!same) return false;
    }
  }
  return true;
}

Verdict check_cor2(const Instance& in, const Operators&) {
  const Covering& a = in.coverings[0];
  const Covering& b = in.coverings[1];
  if (!members_agree(a, b, true)) return std::nullopt;
  if (!same_lower_operator_exhaustive(a, b)) return "members agree on lower but operators differ";
  if (!same_upper_operator_exhaustive(a, b)) return "members agree on lower but upper operators differ";
  return std::nullopt;
}

Verdict check_cor3(const Instance& in, const Operators& ops) {
  const Covering& a = in.coverings[0];
  const Covering& b = in.coverings[1];
  const bool sl = same_lower_operator_exhaustive(a, b);
  const Covering ra = ops.reduct(a);
  const Covering rb = ops.reduct(b);
  if (sl == (ra == rb)) return std::nullopt;
  return std::string(sl ? "equal lower operators" : "different lower operators") + " but reducts " +
         ra.to_string() + " and " + rb.to_string();
}

Verdict check_thm3(const Instance& in, const Operators&) {
  const Covering& a = in.coverings[0];
  const Covering& b = in.coverings[1];
  if (!members_agree(a, b, false)) return std::nullopt;
  if (!same_upper_operator_exhaustive(a, b)) return "members agree on upper but operators differ";
  return std::nullopt;
}

Verdict check_combined(const Instance& in, const Covering& combined, const char* what) {
  const Covering& a = in.coverings[0];
  const Covering& b = in.coverings[1];
  const ApproxSpace sa(a);
  const ApproxSpace sb(b);
  const ApproxSpace sc(combined);
  const Universe& u = a.universe();
  return for_each_set(in, u, [&](Mask x) -> Verdict {
    const Mask lc = kernel::lower(combined.masks(), x);
    const Mask uc = kernel::upper(sc.neighborhoods(), x);
    for (const auto* s : {&sa, &sb}) {
      if (!mask_subset(kernel::lower(s->covering().masks(), x), lc)) {
        return lower_text(u, x) + ": an input's lower is not within the lower of the " + what;
      }
      if (!mask_subset(uc, kernel::upper(s->neighborhoods(), x))) {
        return lower_text(u, x) + ": the " + what + "'s upper is not within an input's upper";
      }
    }
    return std::nullopt;
  });
}

Verdict check_thm5(const Instance& in, const Operators&) {
  return check_combined(in, join_op(in.coverings[0], in.coverings[1]), "join");
}

Verdict check_thm6(const Instance& in, const Operators&) {
  return check_combined(in, meet_op(in.coverings[0], in.coverings[1]), "meet");
}

Verdict check_prop2(const Instance& in, const Operators& ops) {
  const Covering m = meet_op(in.coverings[0], in.coverings[1]);
  const Covering n = ops.nei(join_op(in.coverings[0], in.coverings[1]));
  if (m == n) return std::nullopt;
  return "meet " + m.to_string() + " vs nei(join) " + n.to_string();
}

// Mapping checks --------------------------------------------------------

Verdict check_lem3(const Instance& in, const Operators&) {
  const Mapping& f = *in.mapping;
  const ApproxSpace src(in.coverings[0]);
  const ApproxSpace dst(in.coverings[1]);
  const bool definable = is_homomorphism(f, src, dst, HomMode::Definable);
  if (is_homomorphism(f, src, dst, HomMode::Strict) && !definable) {
    return "strict homomorphism fails the definable test";
  }
  if (!definable) return std::nullopt;
  const Universe& u = src.universe();
  return for_each_set(in, u, [&](Mask x) -> Verdict {
    const auto r = preservation_report(f, src, dst, Subset(u, x));
    if (r.lower_inclusion_holds) return std::nullopt;
    return lower_text(u, x) + ": f(X⁻)=" + r.f_lower_x.to_string() + " not within f(X)⁻=" +
           r.lower_f_x.to_string();
  });
}

Verdict iso_gate(const Instance& in, bool& iso) {
  const ApproxSpace src(in.coverings[0]);
  const ApproxSpace dst(in.coverings[1]);
  iso = is_isomorphism(*in.mapping, src, dst, HomMode::Definable);
  if (in.tag == "constructed" && !iso) return "constructed relabeling not recognized as an isomorphism";
  return std::nullopt;
}

Verdict check_lem4(const Instance& in, const Operators&) {
  bool iso = false;
  if (auto v = iso_gate(in, iso)) return v;
  if (!iso) return std::nullopt;
  const Mapping& f = *in.mapping;
  const ApproxSpace src(in.coverings[0]);
  const ApproxSpace dst(in.coverings[1]);
  for (std::size_t x = 0; x < src.universe().size(); ++x) {
    const Subset lhs = image(f, neighborhood(src, x));
    const Subset rhs = neighborhood(dst, f(x));
    if (lhs != rhs) {
      return "f(N(" + src.universe().name(x) + ")) = " + lhs.to_string() + " but N(f(x)) = " +
             rhs.to_string();
    }
  }
  return std::nullopt;
}

Verdict check_thm7(const Instance& in, const Operators&) {
  bool iso = false;
  if (auto v = iso_gate(in, iso)) return v;
  if (!iso) return std::nullopt;
  const Mapping& f = *in.mapping;
  const ApproxSpace src(in.coverings[0]);
  const ApproxSpace dst(in.coverings[1]);
  const Universe& u = src.universe();
  return for_each_set(in, u, [&](Mask x) -> Verdict {
    const auto r = preservation_report(f, src, dst, Subset(u, x));
    if (r.lower_equal && r.upper_equal && r.neighborhoods_transported.value_or(false)) {
      return std::nullopt;
    }
    return lower_text(u, x) + ": f(X⁻)=" + r.f_lower_x.to_string() + ", f(X)⁻=" +
           r.lower_f_x.to_string() + ", f(X⁺)=" + r.f_upper_x.to_string() + ", f(X)⁺=" +
           r.upper_f_x.to_string();
  });
}

// Reference data --------------------------------------------------------

Verdict expect_set(const Universe& u, const char* what, Mask got, Mask want) {
  if (got == want) return std::nullopt;
  return std::string(what) + " is " + show(u, got) + ", expected " + show(u, want);
}

Verdict expect_covering(const char* what, const Covering& got, const std::vector<Mask>& want) {
  const Covering expected(got.universe(), want);
  if (got == expected) return std::nullopt;
  return std::string(what) + " is " + got.to_string() + ", expected " + expected.to_string();
}

#define COVROUGH_EXPECT(expr) \
  if (auto v_ = (expr)) return v_

Verdict check_ex1(const Instance& in, const Operators&) {
  const ApproxSpace sp(in.coverings[0]);
  const Universe& u = sp.universe();
  const auto m = [&](std::initializer_list<std::string_view> l) { return u.subset(l).bits(); };
  COVROUGH_EXPECT(expect_set(u, "N(a)", sp.neighborhoods()[u.index_of("a")], m({"a"})));
  COVROUGH_EXPECT(expect_set(u, "N(b)", sp.neighborhoods()[u.index_of("b")], m({"b"})));
  COVROUGH_EXPECT(expect_set(u, "N(c)", sp.neighborhoods()[u.index_of("c")], m({"a", "c"})));
  COVROUGH_EXPECT(expect_set(u, "N(d)", sp.neighborhoods()[u.index_of("d")], m({"b", "d"})));
  const Subset x = u.subset({"a", "d"});
  COVROUGH_EXPECT(expect_set(u, "X⁻", lower(sp, x).bits(), 0));
  COVROUGH_EXPECT(expect_set(u, "X⁺ (def3)", upper_def3(sp, x).bits(), m({"a", "b", "d"})));
  COVROUGH_EXPECT(expect_set(u, "X⁺ (neighborhoods)", upper_neigh(sp, x).bits(), m({"a", "b", "d"})));
  return std::nullopt;
}

Verdict check_ex2(const Instance& in, const Operators&) {
  const ApproxSpace sp(in.coverings[0]);
  const Universe& u = sp.universe();
  const Subset x = u.subset({"a", "d"});
  const auto fam = subcoverings(sp, x);
  // Members in canonical order: C1={a,b}, C2={a,c}, C3={b,d}.
  std::vector<std::vector<Mask>> got;
  for (const FamilyMask f : fam.members) {
    std::vector<Mask> sets;
    for_each_bit(f, [&](std::size_t i) { sets.push_back(sp.covering().masks()[i]); });
    got.push_back(std::move(sets));
  }
  const Mask c1 = u.subset({"a", "b"}).bits();
  const Mask c2 = u.subset({"a", "c"}).bits();
  const Mask c3 = u.subset({"b", "d"}).bits();
  std::vector<std::vector<Mask>> want{{c1, c2, c3}, {c1, c3}, {c2, c3}};
  std::ranges::sort(got);
  std::ranges::sort(want);
  if (got != want) return "subcoverings of {a, d} differ from {C, {C1,C3}, {C2,C3}}";
  const Mask abd = u.subset({"a", "b", "d"}).bits();
  COVROUGH_EXPECT(expect_set(u, "upper via subcoverings", upper_subcov(sp, x).bits(), abd));
  COVROUGH_EXPECT(expect_set(u, "upper via proper subcoverings", upper_subcov_nontrivial(sp, x).bits(), abd));
  COVROUGH_EXPECT(expect_set(u, "upper via neighborhoods", upper_neigh(sp, x).bits(), abd));
  return std::nullopt;
}

using reference::xs;

Verdict check_ex3(const Instance& in, const Operators& ops) {
  const std::vector<Mask> pairs{xs({1, 2}), xs({1, 3}), xs({1, 4}), xs({2, 3}), xs({2, 4}), xs({3, 4})};
  COVROUGH_EXPECT(expect_covering("reduct(C)", ops.reduct(in.coverings[0]), pairs));
  COVROUGH_EXPECT(expect_covering("reduct(C')", ops.reduct(in.coverings[1]), pairs));
  if (!same_lower_operator_exhaustive(in.coverings[0], in.coverings[1]) ||
      !same_upper_operator_exhaustive(in.coverings[0], in.coverings[1])) {
    return "the two coverings do not induce the same approximations";
  }
  return std::nullopt;
}

Verdict check_ex4(const Instance& in, const Operators& ops) {
  const Covering& c = in.coverings[0];
  const std::vector<Mask> triples{xs({1, 2, 3}), xs({1, 2, 4}), xs({1, 3, 4}), xs({2, 3, 4})};
  COVROUGH_EXPECT(expect_covering("int(C)", ops.int_op(c), triples));
  for (std::size_t i = 0; i < c.size(); ++i) {
    const bool triple = std::ranges::find(triples, c.masks()[i]) != triples.end();
    if (is_non_intersectional(c, i) != triple) {
      return "member " + c.member(i).to_string() + " misclassified";
    }
  }
  return std::nullopt;
}

Verdict check_ex5(const Instance& in, const Operators&) {
  const Covering& c1 = in.coverings[0];
  const Covering& c2 = in.coverings[1];
  const Universe& u = c1.universe();
  const Covering join = join_op(c1, c2);
  const Covering meet = meet_op(c1, c2);
  COVROUGH_EXPECT(expect_covering("C1 ∨ C2", join, {xs({1, 2}), xs({2, 4}), xs({1, 2, 3}), xs({2, 3, 4})}));
  COVROUGH_EXPECT(expect_covering("C1 ∧ C2", meet, {xs({2}), xs({1, 2}), xs({2, 3}), xs({2, 4})}));
  const Mask x = xs({2, 3});
  const Covering printed(u, {xs({1, 2}), xs({2, 3}), xs({2, 4})});
  for (const Covering* m : {&meet, &printed}) {
    const ApproxSpace a(c1), b(c2), j(join), k(*m);
    COVROUGH_EXPECT(expect_set(u, "X⁻ under C1", kernel::lower(c1.masks(), x), 0));
    COVROUGH_EXPECT(expect_set(u, "X⁻ under C2", kernel::lower(c2.masks(), x), 0));
    COVROUGH_EXPECT(expect_set(u, "X⁻ under join", kernel::lower(join.masks(), x), 0));
    COVROUGH_EXPECT(expect_set(u, "X⁻ under meet", kernel::lower(m->masks(), x), x));
    COVROUGH_EXPECT(expect_set(u, "X⁺ under C2", kernel::upper(b.neighborhoods(), x), x));
    COVROUGH_EXPECT(expect_set(u, "X⁺ under join", kernel::upper(j.neighborhoods(), x), x));
    COVROUGH_EXPECT(expect_set(u, "X⁺ under meet", kernel::upper(k.neighborhoods(), x), x));
    COVROUGH_EXPECT(expect_set(u, "X⁺ under C1", kernel::upper(a.neighborhoods(), x), xs({2, 3, 4})));
  }
  return std::nullopt;
}

Verdict check_ex6(const Instance& in, const Operators& ops) {
  const Covering& c = in.coverings[0];
  const Mapping id = identity_mapping(c.universe());
  const ApproxSpace base(c);
  const ApproxSpace red(ops.reduct(c));
  const ApproxSpace nei(ops.nei(c));
  const ApproxSpace in_(ops.int_op(c));
  if (in.tag == "nei-not-back") {
    if (is_homomorphism(id, nei, base)) return "identity nei(C) -> C is a homomorphism here";
    return std::nullopt;
  }
  if (in.tag == "int-not-forward") {
    if (is_homomorphism(id, base, in_)) return "identity C -> int(C) is a homomorphism here";
    return std::nullopt;
  }
  if (!is_homomorphism(id, base, red) || !is_homomorphism(id, red, base)) {
    return "identity is not a homomorphism between C and reduct(C)";
  }
  if (!is_isomorphism(id, base, red)) return "identity is not an isomorphism onto reduct(C)";
  if (!is_homomorphism(id, base, nei)) return "identity C -> nei(C) is not a homomorphism";
  if (!is_homomorphism(id, in_, base)) return "identity int(C) -> C is not a homomorphism";
  return std::nullopt;
}

Verdict check_count(const Instance& in, const Operators&) {
  static constexpr std::array<std::uint64_t, 5> kKnown{1, 5, 109, 32297, 2147321017};
  const std::size_t n = in.coverings[0].universe().size();
  const BigInt formula = count_coverings(n);
  if (n <= kKnown.size() && formula != kKnown[n - 1]) {
    return "formula gives " + formula.str() + " for n=" + std::to_string(n) + ", expected " +
           std::to_string(kKnown[n - 1]);
  }
  if (in.tag == "formula+enumeration") {
    std::uint64_t count = 0;
    auto stream = enumerate_coverings(in.coverings[0].universe());
    while (stream.next()) ++count;
    if (formula != count) {
      return "enumeration yields " + std::to_string(count) + " coverings, formula " + formula.str();
    }
  }
  return std::nullopt;
}

Verdict check_rmk2(const Instance& in, const Operators& ops) {
  const Covering& c = in.coverings[0];
  const Covering t = ops.int_op(c);
  const Universe& u = c.universe();
  for (const Mask x : in.sets) {
    const Mask under_int = kernel::lower(t.masks(), x);
    const Mask under_c = kernel::lower(c.masks(), x);
    if (mask_subset(under_int, under_c) && under_int != under_c) {
      return "X=" + show(u, x) + ": lower under int(C) " + show(u, under_int) +
             " strictly inside lower under C " + show(u, under_c);
    }
  }
  return std::nullopt;
}

Verdict check_rmk4(const Instance& in, const Operators& ops) {
  const Covering& c = in.coverings[0];
  const Covering v = ops.nei(c);
  const Universe& u = c.universe();
  if (in.tag == "reference") {
    std::vector<Mask> singles;
    for (std::size_t i = 0; i < u.size(); ++i) singles.push_back(Mask{1} << i);
    if (v != Covering(u, singles)) return std::nullopt;
  }
  for (const Mask x : in.sets) {
    const Mask under_c = kernel::lower(c.masks(), x);
    const Mask under_nei = kernel::lower(v.masks(), x);
    if (mask_subset(under_c, under_nei) && under_c != under_nei) {
      return "X=" + show(u, x) + ": lower under C " + show(u, under_c) +
             " strictly inside lower under nei(C) " + show(u, under_nei);
    }
  }
  return std::nullopt;
}

Verdict check_rmk3(const Instance& in, const Operators& ops) {
  const Covering& c = in.coverings[0];
  const Covering ri = ops.reduct(ops.int_op(c));
  const Covering ir = ops.int_op(ops.reduct(c));
  if (ri == ir) return std::nullopt;
  if (in.tag == "reference") {
    if (ri != Covering(c.universe(), {xs({1, 2, 3}), xs({1, 2, 4}), xs({1, 3, 4}), xs({2, 3, 4})})) {
      return std::nullopt;
    }
    if (ir != Covering(c.universe(), {xs({2}), xs({1, 3}), xs({1, 2, 4}), xs({1, 3, 4}), xs({2, 3, 4})})) {
      return std::nullopt;
    }
  }
  if (!same_upper_operator_exhaustive(c, ri) || !same_upper_operator_exhaustive(c, ir)) {
    return std::nullopt;
  }
  return "reduct∘int = " + ri.to_string() + " but int∘reduct = " + ir.to_string() +
         "; both keep the upper operator of C";
}

Verdict check_rmk5(const Instance& in, const Operators&) {
  const Mapping& f = *in.mapping;
  const ApproxSpace src(in.coverings[0]);
  const ApproxSpace dst(in.coverings[1]);
  if (!is_homomorphism(f, src, dst, HomMode::Definable)) return std::nullopt;
  const Universe& u = src.universe();
  for (const Mask x : in.sets) {
    const auto r = preservation_report(f, src, dst, Subset(u, x));
    if (!is_subset(r.f_upper_x, r.upper_f_x) && !is_subset(r.upper_f_x, r.f_upper_x)) {
      return "X=" + show(u, x) + ": f(X⁺)=" + r.f_upper_x.to_string() + " and f(X)⁺=" +
             r.upper_f_x.to_string() + " are incomparable";
    }
  }
  return std::nullopt;
}

#undef COVROUGH_EXPECT

// ---------------------------------------------------------------------------
// Catalog

std::string scope_single(const ScopeSpec& s) {
  std::ostringstream out;
  out << "all coverings n<=" << exhaustive_single_n(s) << " x all subsets";
  if (s.max_n >= 5) {
    out << "; seeded n=5.." << s.max_n << " (" << s.seeds << " coverings x " << s.sample_sets << " subsets)";
  }
  return out.str();
}

std::string scope_pairs(const ScopeSpec& s) {
  std::ostringstream out;
  out << "all covering pairs n<=" << exhaustive_pair_n(s) << " x all subsets";
  if (s.max_n >= 4) out << "; seeded n=4.." << s.max_n << " (" << s.pair_seeds << " pairs)";
  return out.str();
}

std::string scope_converse(const ScopeSpec&) { return "all covering pairs n<=3 until a witness"; }

std::string scope_partitions(const ScopeSpec& s) {
  std::ostringstream out;
  out << "all partitions n<=" << exhaustive_single_n(s) << " x all subsets";
  if (s.max_n >= 5) out << "; seeded n=5.." << s.max_n << " (" << s.seeds << " partitions)";
  return out.str();
}

std::string scope_count(const ScopeSpec& s) {
  return "formula n=1..5; enumeration n<=" + std::to_string(exhaustive_single_n(s));
}

std::string scope_hom(const ScopeSpec& s) {
  const std::size_t n = std::min<std::size_t>(s.max_n, 3);
  return "all mappings between " + std::to_string(n) + "-element universes x " +
         std::to_string(s.pair_seeds) + " seeded covering pairs";
}

std::string scope_iso(const ScopeSpec& s) {
  return std::to_string(s.seeds) + " seeded relabelings n<=" +
         std::to_string(std::min<std::size_t>(s.max_n, 6)) + " x " +
         std::to_string(s.sample_sets) + " subsets; isomorphisms found among " + scope_hom(s);
}

std::string scope_ex6(const ScopeSpec& s) {
  return "all coverings n<=" + std::to_string(exhaustive_pair_n(s)) + " plus two reference coverings";
}

std::string scope_fixed(const ScopeSpec&) { return "reference data"; }

struct LawEntry {
  LawId id;
  std::string_view name;
  std::string_view statement;
  bool existential;
  Generator generate;
  Check check;
  ScopeText scope;
  std::string_view note;
};

const std::array<LawEntry, kLawCount>& catalog() {
  static const std::array<LawEntry, kLawCount> table{{
      {LawId::THM1, "THM1", "upper approximation = intersection of the unions of all subcoverings of X",
       false, gen_single, check_thm1, scope_single, ""},
      {LawId::COR1, "COR1", "leaving the full covering out of the subcovering intersection changes nothing",
       false, gen_single, check_cor1, scope_single, ""},
      {LawId::PROP1, "PROP1", "equal lower operators imply equal upper operators", false, gen_pairs,
       check_prop1, scope_pairs, ""},
      {LawId::PROP1_CONVERSE_FAILS, "PROP1_CONVERSE_FAILS",
       "some pair has equal upper operators but different lower operators", true, gen_converse,
       check_converse, scope_converse, ""},
      {LawId::COR2, "COR2", "members with equal lowers under both coverings force equal operators",
       false, gen_pairs, check_cor2, scope_pairs, ""},
      {LawId::COR3, "COR3", "equal lower operators iff equal reducts", false, gen_pairs, check_cor3,
       scope_pairs, ""},
      {LawId::COR4, "COR4", "the definable closure keeps both approximations and the reduct", false,
       gen_single, check_cor4, scope_single, ""},
      {LawId::COR5, "COR5", "a covering and its reduct give the same approximations", false,
       gen_single, check_cor5, scope_single, ""},
      {LawId::LEM1_EQ_DEF3, "LEM1_EQ_DEF3", "upper approximation = union of N(x) over x in X", false,
       gen_single, check_lem1, scope_single, ""},
      {LawId::LEM2, "LEM2", "int(C) has the same neighborhoods as C", false, gen_single, check_lem2,
       scope_single, ""},
      {LawId::LEM3, "LEM3", "homomorphisms satisfy f(X⁻) ⊆ f(X)⁻", false, gen_hom, check_lem3,
       scope_hom, "strict homomorphisms are also checked to pass the definable test"},
      {LawId::LEM4, "LEM4", "isomorphisms transport neighborhoods: f(N(x)) = N(f(x))", false, gen_iso,
       check_lem4, scope_iso, ""},
      {LawId::THM2, "THM2", "int keeps the upper approximation and can only shrink the lower", false,
       gen_single, check_thm2, scope_single, ""},
      {LawId::THM3, "THM3", "members with equal uppers under both coverings force equal upper operators",
       false, gen_pairs, check_thm3, scope_pairs, ""},
      {LawId::THM4, "THM4", "nei keeps the upper approximation and can only grow the lower", false,
       gen_single, check_thm4, scope_single, ""},
      {LawId::THM5, "THM5", "the join has larger lowers and smaller uppers than either input", false,
       gen_pairs, check_thm5, scope_pairs, ""},
      {LawId::THM6, "THM6", "the meet has larger lowers and smaller uppers than either input", false,
       gen_pairs, check_thm6, scope_pairs, ""},
      {LawId::THM7, "THM7", "isomorphisms preserve lower and upper approximations", false, gen_iso,
       check_thm7, scope_iso, ""},
      {LawId::PROP2, "PROP2", "meet = nei(join)", false, gen_pairs, check_prop2, scope_pairs, ""},
      {LawId::EX1, "EX1", "neighborhoods and approximations of {a,d} in the four-element space", false,
       gen_fixed<ex1_instance>, check_ex1, scope_fixed, ""},
      {LawId::EX2, "EX2", "subcoverings of {a,d} and the upper approximation they give", false,
       gen_fixed<ex1_instance>, check_ex2, scope_fixed, ""},
      {LawId::EX3, "EX3", "two coverings with the six pairs as common reduct", false,
       gen_fixed<ex3_instance>, check_ex3, scope_fixed, ""},
      {LawId::EX4, "EX4", "int keeps exactly the four triples", false, gen_fixed<ex4_instance>,
       check_ex4, scope_fixed, ""},
      {LawId::EX5, "EX5", "join, meet and the approximations of {x2,x3}", false,
       gen_fixed<ex5_instance>, check_ex5, scope_fixed,
       "the reference listing of the meet is {C12, C23, C24}; the neighborhood construction also "
       "yields N(x2) = {x2}. The computed meet keeps {x2}; all stated approximations hold under "
       "either family"},
      {LawId::EX6, "EX6", "identity homomorphisms among C, reduct(C), nei(C), int(C)", false, gen_ex6,
       check_ex6, scope_ex6, "homomorphisms are taken in the definable sense"},
      {LawId::RMK2_STRICTNESS, "RMK2_STRICTNESS", "int can strictly shrink a lower approximation", true,
       gen_fixed<rmk2_instance>, check_rmk2, scope_fixed,
       "the reference statement has the subscripts swapped: computed lower of C1 is C1 under C and "
       "empty under int(C), matching the direction of THM2"},
      {LawId::RMK3, "RMK3", "reduct and int do not commute but keep the upper operator", true,
       gen_fixed<ex4_instance>, check_rmk3, scope_fixed, ""},
      {LawId::RMK4_STRICTNESS, "RMK4_STRICTNESS", "nei can strictly grow a lower approximation", true,
       gen_fixed<rmk4_instance>, check_rmk4, scope_fixed, ""},
      {LawId::RMK5, "RMK5", "a homomorphism where f(X⁺) and f(X)⁺ are incomparable", true,
       gen_fixed<rmk5_instance>, check_rmk5, scope_fixed, ""},
      {LawId::COUNT_A003465, "COUNT_A003465", "number of coverings: 1, 5, 109, 32297, 2147321017",
       false, gen_count, check_count, scope_count, ""},
      {LawId::SANDWICH, "SANDWICH", "X⁻ ⊆ X ⊆ X⁺ and members are their own lower approximation", false,
       gen_single, check_sandwich, scope_single, ""},
      {LawId::MONOTONE, "MONOTONE", "X ⊆ Y implies X⁻ ⊆ Y⁻ and X⁺ ⊆ Y⁺", false, gen_single,
       check_monotone, scope_single, ""},
      {LawId::PARTITION_PAWLAK, "PARTITION_PAWLAK",
       "on partitions the approximations are the classical ones", false, gen_partitions,
       check_partition, scope_partitions, ""},
      {LawId::IDEMPOTENCE, "IDEMPOTENCE", "reduct, int and nei are idempotent", false, gen_single,
       check_idempotence, scope_single, ""},
  }};
  return table;
}

const LawEntry& entry(LawId law) {
  const auto& table = catalog();
  const auto it = std::ranges::find(table, law, &LawEntry::id);
  if (it == table.end()) throw Error(ErrorCode::UnknownLaw, "unregistered law");
  return *it;
}

}  // namespace

std::span<const LawId> all_laws() noexcept {
  static const std::array<LawId, kLawCount> ids = [] {
    std::array<LawId, kLawCount> out{};
    for (std::size_t i = 0; i < kLawCount; ++i) out[i] = catalog()[i].id;
    return out;
  }();
  return ids;
}

std::string_view law_name(LawId law) noexcept { return entry(law).name; }

LawId parse_law(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e.id;
  }
  throw Error(ErrorCode::UnknownLaw, "'" + std::string(name) + "'");
}

std::string_view law_statement(LawId law) noexcept { return entry(law).statement; }

bool expects_witness(LawId law) noexcept { return entry(law).existential; }

void validate(const ScopeSpec& scope) {
  if (scope.max_n < 1 || scope.max_n > kMaxScopeN) {
    throw Error(ErrorCode::ScopeTooLarge,
                "max_n must lie in 1.." + std::to_string(kMaxScopeN));
  }
  if (scope.seeds > kMaxScopeSeeds || scope.pair_seeds > kMaxScopeSeeds ||
      scope.sample_sets > kMaxScopeSeeds) {
    throw Error(ErrorCode::ScopeTooLarge, "seed counts are limited to " + std::to_string(kMaxScopeSeeds));
  }
}

ScopeSpec apply_environment(ScopeSpec scope) {
  if (const char* raw = std::getenv("COVROUGH_MAX_N"); raw != nullptr && *raw != '\0') {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(raw, &end, 10);
    if (end == raw || *end != '\0' || cap == 0) {
      throw Error(ErrorCode::InvalidArgument, std::string("COVROUGH_MAX_N='") + raw + "'");
    }
    scope.max_n = std::min<std::size_t>(scope.max_n, cap);
  }
  return scope;
}

const Operators& default_operators() {
  static const Operators ops{
      [](const Covering& c) { return reduct(c); },
      [](const Covering& c) { return int_op(c); },
      [](const Covering& c) { return nei_op(c); },
  };
  return ops;
}

std::string_view to_string(Outcome outcome) noexcept {
  switch (outcome) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::ExpectedFailureFound: return "expected-failure-found";
  }
  return "unknown";
}

json to_json(const LawReport& r) {
  json j{
      {"law", law_name(r.law)},
      {"statement", law_statement(r.law)},
      {"scope", r.scope},
      {"instances_checked", r.instances_checked},
      {"outcome", to_string(r.outcome)},
      {"passed", r.passed()},
      {"elapsed_ms", std::chrono::duration<double, std::milli>(r.elapsed).count()},
  };
  j["witness"] = r.witness ? *r.witness : json(nullptr);
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

LawReport run_law(LawId law, const ScopeSpec& scope, const Operators& ops) {
  validate(scope);
  const LawEntry& e = entry(law);
  LawReport report;
  report.law = law;
  report.scope = e.scope(scope);
  report.note = std::string(e.note);
  const auto start = std::chrono::steady_clock::now();

  bool found = false;
  try {
    e.generate(scope, [&](Instance in) {
      ++report.instances_checked;
      Verdict v = e.check(in, ops);
      if (!v) return true;
      found = true;
      report.detail = *v;
      report.witness = instance_to_json(in);
      return false;
    });
    if (e.existential) {
      report.outcome = found ? Outcome::ExpectedFailureFound : Outcome::Fail;
      if (!found) report.detail = "no witness found in scope";
    } else {
      report.outcome = found ? Outcome::Fail : Outcome::Pass;
    }
  } catch (const std::exception& ex) {
    report.outcome = Outcome::Fail;
    report.detail = std::string("error: ") + ex.what();
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<LawReport> run_laws(std::span<const LawId> laws, const ScopeSpec& scope, std::size_t jobs,
                                const Operators& ops) {
  validate(scope);
  std::vector<LawReport> out(laws.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < laws.size(); i = next++) out[i] = run_law(laws[i], scope, ops);
  };
  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(laws.size(), 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return out;
}

std::vector<LawReport> run_all(const ScopeSpec& scope, std::size_t jobs, const Operators& ops) {
  return run_laws(all_laws(), scope, jobs, ops);
}

bool replay_witness(LawId law, const json& witness, const Operators& ops) {
  const LawEntry& e = entry(law);
  const Instance in = instance_from_json(witness);
  return e.check(in, ops).has_value();
}

std::string format_table(std::span<const LawReport> reports) {
  std::ostringstream out;
  const auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
  };
  out << pad("LAW", 22) << pad("OUTCOME", 24) << pad("INSTANCES", 11) << pad("MS", 10) << "SCOPE\n";
  for (const auto& r : reports) {
    std::ostringstream ms;
    ms.setf(std::ios::fixed);
    ms.precision(1);
    ms << std::chrono::duration<double, std::milli>(r.elapsed).count();
    out << pad(std::string(law_name(r.law)), 22) << pad(std::string(to_string(r.outcome)), 24)
        << pad(std::to_string(r.instances_checked), 11) << pad(ms.str(), 10) << r.scope << '\n';
    if (!r.detail.empty()) out << "    " << r.detail << '\n';
    if (!r.note.empty()) out << "    note: " << r.note << '\n';
    if (r.witness && r.outcome == Outcome::Fail) out << "    witness: " << r.witness->dump() << '\n';
  }
  std::size_t passed = 0;
  for (const auto& r : reports) passed += r.passed() ? 1 : 0;
  out << passed << "/" << reports.size() << " laws passed\n";
  return out.str();
}

}  // namespace covrough::laws
