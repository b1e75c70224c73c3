#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "roughcm/classifiers.hpp"
#include "roughcm/core.hpp"
#include "roughcm/matrices.hpp"
#include "roughcm/rational.hpp"
#include "roughcm/rng.hpp"

// Brute-force reference implementations and the random instance machinery
// used by the property and fuzz suites. Nothing here calls the approximation
// operators of core; the point is to cross-check them.

namespace roughcm {

struct GeneratorConfig {
  std::size_t n_objects = 6;             // 2..100
  std::size_t n_attributes = 2;          // 1..8
  std::size_t values_per_attribute = 3;  // 1..6
  std::size_t n_decision_values = 2;     // 2..8, <= n_objects
  std::uint64_t seed = 0;

  /// Throws Config.
  void validate() const;

  friend bool operator==(const GeneratorConfig&, const GeneratorConfig&) = default;
};

/// Attributes a1..aN with tokens v0..v{V-1}, decision "d" with tokens
/// c0..c{K-1}. Decisions are redrawn until at least two distinct values occur.
DecisionSystem random_decision_system(const GeneratorConfig& cfg);

/// Per granule, a uniform choice among the classes it meets.
RoughClassifier random_validated_classifier(const GranuleFrequencyMatrix& gfm,
                                            Rng& rng);

/// Per-element membership tests: x is kept iff its block is inside
/// (oracle_lower) or meets (oracle_upper) y.
ObjectSet oracle_lower(const Partition& p, const ObjectSet& y);
ObjectSet oracle_upper(const Partition& p, const ObjectSet& y);

struct BestClassifier {
  RoughClassifier classifier;
  Rational success_ratio;
};

inline constexpr std::uint64_t kExhaustiveLimit = 1'000'000;

/// Enumerates all k^m classifiers; throws InstanceTooLarge past `limit`.
BestClassifier exhaustive_best_classifier(const GranuleFrequencyMatrix& gfm,
                                          std::uint64_t limit = kExhaustiveLimit);

enum class ClassifierKind { Mrc, RandomValidated, Supplied };
std::string_view to_string(ClassifierKind kind) noexcept;
ClassifierKind parse_classifier_kind(std::string_view text);

struct VerificationContext {
  ClassifierKind kind = ClassifierKind::Supplied;
  TieBreak tie_break;
  std::optional<GeneratorConfig> config;
};

enum class CheckStatus { Pass, Fail, NotApplicable };
std::string_view to_string(CheckStatus status) noexcept;
CheckStatus parse_check_status(std::string_view text);

/// One inequality chain (or implication) evaluated for one decision class.
struct InequalityCheck {
  std::string property;   // thm1 .. thm4, lemma1_1 .. lemma1_3, base_lower, base_upper
  std::optional<std::size_t> class_index;  // empty for whole-classifier checks
  std::string statement;  // human-readable chain, e.g. "nl <= nl** <= nl* <= |Y|"
  std::vector<std::int64_t> values;
  CheckStatus status = CheckStatus::NotApplicable;
};

struct TheoremReport {
  std::vector<InequalityCheck> checks;
  VerificationContext context;

  std::size_t failures() const;
  bool overall_pass() const { return failures() == 0; }
};

/// Recomputes everything from the decision system: true nl_j/nu_j through the
/// oracle operators, bounds through the indices module. Checks that need the
/// overlap condition are NotApplicable when f violates it; thm3/thm4 are
/// NotApplicable unless context.kind is Mrc.
TheoremReport verify_theorems(const DecisionSystem& ds,
                              std::span<const std::string> attributes,
                              const RoughClassifier& f,
                              const VerificationContext& context);

struct FuzzConfig {
  std::size_t trials = 10'000;
  std::uint64_t seed = 42;
  std::size_t max_objects = 30;
  std::size_t max_attributes = 6;
  std::size_t max_values = 6;
  std::size_t max_classes = 5;
  unsigned threads = 1;

  /// Throws Config.
  void validate() const;
};

struct FuzzFailure {
  std::size_t trial = 0;
  GeneratorConfig config;
  ClassifierKind kind = ClassifierKind::Mrc;
  std::string detail;
};

struct FuzzSummary {
  FuzzConfig config;
  std::size_t trials_run = 0;
  std::size_t failed_trials = 0;
  std::size_t mrc_failures = 0;     // failed trials, mrc classifier
  std::size_t random_failures = 0;  // failed trials, random validated classifier
  std::size_t checks_evaluated = 0;
  std::optional<FuzzFailure> first_counterexample;

  std::size_t failures() const { return mrc_failures + random_failures; }
};

/// Instance parameters of trial `index`, derived from (config.seed, index).
GeneratorConfig fuzz_trial_config(const FuzzConfig& config, std::size_t index);

/// Each trial generates one system over all of its attributes and verifies
/// both the mrc (lowest-index) and a random validated classifier.
FuzzSummary run_fuzz(const FuzzConfig& config);

}  // namespace roughcm
