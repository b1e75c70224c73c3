#include "roughcm/indices.hpp"

#include <algorithm>

#include "roughcm/error.hpp"

namespace roughcm {

ApproximationSummary approximation_summary(const Partition& granules,
                                           const Partition& decisions) {
  if (granules.universe() != decisions.universe())
    throw Error(ErrorCode::UniverseMismatch, "partitions cover different object sets");
  if (decisions.size() < 2)
    throw Error(ErrorCode::DegenerateDecision, "need at least two decision classes");

  ApproximationSummary summary;
  Count lower_total = 0;
  for (const auto& y : decisions.blocks()) {
    ClassApproximation c;
    c.size = y.size();
    c.lower = lower_approximation(granules, y).size();
    c.upper = upper_approximation(granules, y).size();
    c.lower_precision = make_ratio(c.lower, c.size);
    c.upper_precision = make_ratio(c.size, c.upper);
    c.accuracy = make_ratio(c.lower, c.upper);
    lower_total += c.lower;
    summary.classes.push_back(c);
  }
  summary.gamma = make_ratio(lower_total, granules.universe().size());
  return summary;
}

Rational gamma_hat(const RoughConfusionMatrix& cm) {
  return make_ratio(cm.diagonal_sum(), cm.total());
}

namespace {

// n_i. + n_.i - n_ii
Count reach(const RoughConfusionMatrix& cm, std::size_t i) {
  return cm.row_sums()[i] + cm.col_sums()[i] - cm.cell(i, i);
}

}  // namespace

Rational alpha_hat(const RoughConfusionMatrix& cm, std::size_t cls) {
  if (cls >= cm.class_count())
    throw Error(ErrorCode::IndexOutOfRange, "class index out of range");
  const Count den = reach(cm, cls);
  if (den == 0)
    throw Error(ErrorCode::UndefinedClass, "class " + std::to_string(cls + 1) +
                                               " is neither predicted nor present");
  return make_ratio(cm.cell(cls, cls), den);
}

std::vector<std::optional<Rational>> alpha_hat_per_class(const RoughConfusionMatrix& cm) {
  std::vector<std::optional<Rational>> out;
  for (std::size_t i = 0; i < cm.class_count(); ++i) {
    if (reach(cm, i) == 0)
      out.emplace_back(std::nullopt);
    else
      out.emplace_back(alpha_hat(cm, i));
  }
  return out;
}

std::optional<Rational> alpha_aggregate(const RoughConfusionMatrix& cm) {
  Count den = 0;
  for (std::size_t i = 0; i < cm.class_count(); ++i) den += reach(cm, i);
  if (den == 0) return std::nullopt;
  return make_ratio(cm.diagonal_sum(), den);
}

Rational alpha_from_gamma(const Rational& g) {
  if (g < 0 || g > 1)
    throw Error(ErrorCode::Range, "gamma " + to_fraction_string(g) + " outside [0, 1]");
  return g / (Rational(2) - g);
}

bool BoundsReport::fragments_hold() const {
  for (const auto& c : classes) {
    if (!(c.nl_star2 <= c.nl_star && c.nl_star <= c.class_size)) return false;
    if (!(c.class_size <= c.nu_star && c.nu_star <= c.nu_star2)) return false;
    if (mrc_classifier) {
      if (!c.nl_m || !c.nu_m) return false;
      if (!(*c.nl_m <= c.nl_star2 && c.nl_star2 <= *c.nu_m)) return false;
    }
  }
  return true;
}

BoundsReport confusion_bounds(const RoughConfusionMatrix& cm,
                              const ValidationReport& validation, bool is_mrc) {
  BoundsReport report;
  report.rule_validated = validation.satisfies_rule();
  report.mrc_classifier = is_mrc;

  const std::size_t k = cm.class_count();
  for (std::size_t j = 0; j < k; ++j) {
    const Count diag = cm.cell(j, j);
    Count row_off = 0;   // sum over i != j of n_ji
    Count col_off = 0;   // sum over i != j of n_ij
    Count col_hits = 0;  // sum over i != j of Ind(n_ij)
    Count row_max = 0;   // max over t != j of n_jt
    for (std::size_t i = 0; i < k; ++i) {
      if (i == j) continue;
      row_off += cm.cell(j, i);
      col_off += cm.cell(i, j);
      col_hits += indicator(cm.cell(i, j));
      row_max = std::max(row_max, cm.cell(j, i));
    }

    ClassBounds b;
    b.class_size = cm.col_sums()[j];
    b.nl_star = diag;
    if (indicator(row_off) > diag) {
      b.nl_star2 = 0;
      b.clamped = true;
    } else {
      b.nl_star2 = diag - indicator(row_off);
    }
    b.nu_star = diag + row_off + col_off;
    b.nu_star2 = b.nu_star + col_hits;
    if (is_mrc) {
      if (row_max > diag) {
        b.nl_m = 0;
        b.clamped = true;
      } else {
        b.nl_m = diag - row_max;
      }
      b.nu_m = diag + row_off + 2 * col_off;
    }
    report.classes.push_back(b);
  }
  return report;
}

}  // namespace roughcm
