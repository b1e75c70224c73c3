#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "roughcm/classifiers.hpp"
#include "roughcm/core.hpp"
#include "roughcm/matrices.hpp"
#include "roughcm/rational.hpp"

namespace roughcm {

constexpr Count indicator(Count b) noexcept { return b == 0 ? 0 : 1; }

struct ClassApproximation {
  Count size = 0;   // n_i
  Count lower = 0;  // nl_i = |Low(Y_i)|
  Count upper = 0;  // nu_i = |Upp(Y_i)|
  Rational lower_precision;  // nl_i / n_i
  Rational upper_precision;  // n_i / nu_i
  Rational accuracy;         // nl_i / nu_i
};

struct ApproximationSummary {
  std::vector<ClassApproximation> classes;
  Rational gamma;  // sum of nl_i over n
};

ApproximationSummary approximation_summary(const Partition& granules,
                                           const Partition& decisions);

/// Diagonal share of the confusion matrix; equal to success_ratio.
Rational gamma_hat(const RoughConfusionMatrix& cm);

/// n_ii / (n_i. + n_.i - n_ii). Throws UndefinedClass when class i is
/// neither predicted nor present.
Rational alpha_hat(const RoughConfusionMatrix& cm, std::size_t cls);

/// Per-class alpha_hat with std::nullopt marking an undefined (0/0) class.
std::vector<std::optional<Rational>> alpha_hat_per_class(
    const RoughConfusionMatrix& cm);

/// sum n_ii / sum (n_i. + n_.i - n_ii); nullopt for an empty matrix.
std::optional<Rational> alpha_aggregate(const RoughConfusionMatrix& cm);

/// g / (2 - g) for g in [0, 1]; throws Range otherwise.
Rational alpha_from_gamma(const Rational& g);

struct ClassBounds {
  Count class_size = 0;  // n_.j
  Count nl_star = 0;
  Count nl_star2 = 0;
  Count nu_star = 0;
  Count nu_star2 = 0;
  std::optional<Count> nl_m;
  std::optional<Count> nu_m;
  bool clamped = false;  // a lower bound went negative and was set to 0
};

struct BoundsReport {
  std::vector<ClassBounds> classes;
  bool rule_validated = false;
  bool mrc_classifier = false;

  /// The orderings that follow from the matrix alone (no source system):
  /// nl** <= nl* <= n_j <= nu* <= nu**, plus nl^m <= nl** <= nu^m for mrc.
  /// Only meaningful when rule_validated.
  bool fragments_hold() const;
};

BoundsReport confusion_bounds(const RoughConfusionMatrix& cm,
                              const ValidationReport& validation, bool is_mrc);

}  // namespace roughcm
