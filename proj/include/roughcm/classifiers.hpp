#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "roughcm/matrices.hpp"
#include "roughcm/rational.hpp"

namespace roughcm {

/// Total map granule index -> decision class index, both 0-based.
class RoughClassifier {
 public:
  RoughClassifier(std::vector<std::size_t> assignment, std::size_t class_count);

  std::size_t granule_count() const noexcept { return assignment_.size(); }
  std::size_t class_count() const noexcept { return classes_; }
  std::size_t operator()(std::size_t granule) const;
  const std::vector<std::size_t>& assignment() const noexcept { return assignment_; }

  friend bool operator==(const RoughClassifier&, const RoughClassifier&) = default;

 private:
  std::vector<std::size_t> assignment_;
  std::size_t classes_;
};

struct TieBreak {
  enum class Kind { Lowest, Highest, SeededRandom };

  Kind kind = Kind::Lowest;
  std::uint64_t seed = 0;  // only read by SeededRandom

  friend bool operator==(const TieBreak&, const TieBreak&) = default;
};

std::string_view to_string(TieBreak::Kind kind) noexcept;
/// "lowest" | "highest" | "random"; throws InvalidArgument.
TieBreak::Kind parse_tie_break(std::string_view text);

struct ValidationReport {
  std::vector<std::size_t> violations;  // granules with X_i ∩ f(X_i) = ∅

  bool satisfies_rule() const noexcept { return violations.empty(); }
};

/// Checks that every granule has at least one member in its assigned class.
ValidationReport validate_overlap(const RoughClassifier& f,
                                  const GranuleFrequencyMatrix& gfm);

/// Sends each granule to a class with maximal row count.
RoughClassifier maximal_row_classifier(const GranuleFrequencyMatrix& gfm,
                                       TieBreak tie_break = {});

/// True when f(i) is an argmax of row i for every granule.
bool is_row_maximal(const RoughClassifier& f, const GranuleFrequencyMatrix& gfm);

/// Correctly classified objects over n.
Rational success_ratio(const RoughConfusionMatrix& cm);

/// Parses `granule class` pairs, one per line (1-based, `#` starts a
/// comment). Every granule in 1..granule_count must appear exactly once.
RoughClassifier parse_classifier_mapping(std::string_view text,
                                         std::size_t granule_count,
                                         std::size_t class_count);

std::string format_classifier_mapping(const RoughClassifier& f);

}  // namespace roughcm
