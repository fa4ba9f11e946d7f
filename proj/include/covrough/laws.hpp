#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "covrough/covering.hpp"

namespace covrough::laws {

enum class LawId {
  THM1,
  COR1,
  PROP1,
  PROP1_CONVERSE_FAILS,
  COR2,
  COR3,
  COR4,
  COR5,
  LEM1_EQ_DEF3,
  LEM2,
  LEM3,
  LEM4,
  THM2,
  THM3,
  THM4,
  THM5,
  THM6,
  THM7,
  PROP2,
  EX1,
  EX2,
  EX3,
  EX4,
  EX5,
  EX6,
  RMK2_STRICTNESS,
  RMK3,
  RMK4_STRICTNESS,
  RMK5,
  COUNT_A003465,
  SANDWICH,
  MONOTONE,
  PARTITION_PAWLAK,
  IDEMPOTENCE,
};

inline constexpr std::size_t kLawCount = 34;

[[nodiscard]] std::span<const LawId> all_laws() noexcept;
[[nodiscard]] std::string_view law_name(LawId law) noexcept;
/// Throws UnknownLaw.
[[nodiscard]] LawId parse_law(std::string_view name);
/// One-line statement of what the law asserts.
[[nodiscard]] std::string_view law_statement(LawId law) noexcept;
/// Laws that pass by finding a witness (counterexamples, strictness).
[[nodiscard]] bool expects_witness(LawId law) noexcept;

/// Search scope shared by every law.
///  - exhaustive single-covering laws: every covering with n <= min(max_n, 4)
///  - exhaustive pairwise laws: every ordered pair with n <= min(max_n, 3)
///  - seeded sampling for larger n up to max_n: `seeds` coverings (or
///    `pair_seeds` pairs) per size, `sample_sets` random subsets each
struct ScopeSpec {
  std::size_t max_n = 6;
  std::size_t seeds = 500;
  std::size_t pair_seeds = 200;
  std::size_t sample_sets = 10;
};

inline constexpr std::size_t kMaxScopeN = 12;
inline constexpr std::size_t kMaxScopeSeeds = 100000;

/// Throws ScopeTooLarge.
void validate(const ScopeSpec& scope);

/// Applies COVROUGH_MAX_N (if set) as an upper bound on max_n.
[[nodiscard]] ScopeSpec apply_environment(ScopeSpec scope);

/// Covering transformations the laws call through, so a deliberately broken
/// implementation can be swapped in to confirm that the catalog notices.
struct Operators {
  std::function<Covering(const Covering&)> reduct;
  std::function<Covering(const Covering&)> int_op;
  std::function<Covering(const Covering&)> nei;
};

[[nodiscard]] const Operators& default_operators();

enum class Outcome { Pass, Fail, ExpectedFailureFound };

[[nodiscard]] std::string_view to_string(Outcome outcome) noexcept;

struct LawReport {
  LawId law;
  std::string scope;
  std::uint64_t instances_checked = 0;
  Outcome outcome = Outcome::Pass;
  /// Replayable instance: spaces, subsets, mapping, tag.
  std::optional<nlohmann::json> witness;
  std::string detail;
  std::string note;
  std::chrono::nanoseconds elapsed{0};

  [[nodiscard]] bool passed() const noexcept { return outcome != Outcome::Fail; }
};

[[nodiscard]] nlohmann::json to_json(const LawReport& report);

/// Deterministic for a given scope (apart from elapsed). Errors raised while
/// checking become a failed report.
[[nodiscard]] LawReport run_law(LawId law, const ScopeSpec& scope,
                                const Operators& ops = default_operators());

/// Runs `laws` on up to `jobs` threads; reports come back in input order.
[[nodiscard]] std::vector<LawReport> run_laws(std::span<const LawId> laws, const ScopeSpec& scope,
                                              std::size_t jobs = 1,
                                              const Operators& ops = default_operators());
[[nodiscard]] std::vector<LawReport> run_all(const ScopeSpec& scope, std::size_t jobs = 1,
                                             const Operators& ops = default_operators());

/// Re-runs the single instance stored in a report witness. Returns true when
/// the instance reproduces what was recorded: a violation for ordinary laws,
/// the sought witness for expected-failure laws.
[[nodiscard]] bool replay_witness(LawId law, const nlohmann::json& witness,
                                  const Operators& ops = default_operators());

/// Fixed-width text table, one row per report plus notes and witnesses.
[[nodiscard]] std::string format_table(std::span<const LawReport> reports);

}  // namespace covrough::laws
