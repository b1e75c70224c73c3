#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "roughcm/core.hpp"
#include "roughcm/rational.hpp"

namespace roughcm {

class RoughClassifier;

/// m x k cross-classification c_ij = |X_i ∩ Y_j| of granules against
/// decision classes. Row and column order follow the source partitions.
class GranuleFrequencyMatrix {
 public:
  /// Validates a rectangular, non-empty table whose rows each hold at least
  /// one non-zero count.
  static GranuleFrequencyMatrix from_counts(
      const std::vector<std::vector<Count>>& rows);

  std::size_t granule_count() const noexcept { return granules_; }
  std::size_t class_count() const noexcept { return classes_; }
  Count cell(std::size_t granule, std::size_t cls) const;
  std::span<const Count> row(std::size_t granule) const;
  const std::vector<Count>& granule_sizes() const noexcept { return granule_sizes_; }
  const std::vector<Count>& class_sizes() const noexcept { return class_sizes_; }
  Count total() const noexcept { return total_; }

  std::vector<std::vector<Count>> rows() const;

 private:
  GranuleFrequencyMatrix() = default;

  std::size_t granules_ = 0;
  std::size_t classes_ = 0;
  std::vector<Count> cells_;
  std::vector<Count> granule_sizes_;
  std::vector<Count> class_sizes_;
  Count total_ = 0;
};

GranuleFrequencyMatrix granule_frequency_matrix(const Partition& granules,
                                                const Partition& decisions);

/// k x k counts n_ij: row i is the predictor set of class i, column j the
/// true class j.
class RoughConfusionMatrix {
 public:
  static RoughConfusionMatrix from_counts(
      const std::vector<std::vector<Count>>& rows);

  std::size_t class_count() const noexcept { return classes_; }
  Count cell(std::size_t predicted, std::size_t actual) const;
  const std::vector<Count>& row_sums() const noexcept { return row_sums_; }
  const std::vector<Count>& col_sums() const noexcept { return col_sums_; }
  Count total() const noexcept { return total_; }
  Count diagonal_sum() const noexcept;

  std::vector<std::vector<Count>> rows() const;

  friend bool operator==(const RoughConfusionMatrix&,
                         const RoughConfusionMatrix&) = default;

 private:
  RoughConfusionMatrix() = default;

  std::size_t classes_ = 0;
  std::vector<Count> cells_;
  std::vector<Count> row_sums_;
  std::vector<Count> col_sums_;
  Count total_ = 0;
};

/// Union of the granules that `f` sends to class `cls` (0-based).
ObjectSet predictor_set(const RoughClassifier& f, std::size_t cls,
                        const Partition& granules);

/// Relabels every granule row by f, aggregates rows sharing a label and
/// emits them in class order; classes nobody predicts get a zero row.
RoughConfusionMatrix confusion_matrix(const GranuleFrequencyMatrix& gfm,
                                      const RoughClassifier& f);

}  // namespace roughcm
