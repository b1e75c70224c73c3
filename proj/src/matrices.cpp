#include "roughcm/matrices.hpp"

#include <algorithm>
#include <string>

#include "roughcm/classifiers.hpp"
#include "roughcm/error.hpp"

namespace roughcm {

namespace {

std::size_t require_rectangular(const std::vector<std::vector<Count>>& rows) {
  if (rows.empty()) throw Error(ErrorCode::ShapeMismatch, "matrix has no rows");
  const std::size_t width = rows.front().size();
  if (width == 0) throw Error(ErrorCode::ShapeMismatch, "matrix has no columns");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width)
      throw Error(ErrorCode::ShapeMismatch, "row " + std::to_string(i + 1) + " has " +
                                                std::to_string(rows[i].size()) +
                                                " cells, expected " + std::to_string(width));
  }
  return width;
}

}  // namespace

GranuleFrequencyMatrix GranuleFrequencyMatrix::from_counts(
    const std::vector<std::vector<Count>>& rows) {
  GranuleFrequencyMatrix g;
  g.classes_ = require_rectangular(rows);
  g.granules_ = rows.size();
  g.granule_sizes_.assign(g.granules_, 0);
  g.class_sizes_.assign(g.classes_, 0);
  g.cells_.reserve(g.granules_ * g.classes_);
  for (std::size_t i = 0; i < g.granules_; ++i) {
    for (std::size_t j = 0; j < g.classes_; ++j) {
      const Count c = rows[i][j];
      g.cells_.push_back(c);
      g.granule_sizes_[i] += c;
      g.class_sizes_[j] += c;
      g.total_ += c;
    }
    if (g.granule_sizes_[i] == 0)
      throw Error(ErrorCode::InvalidArgument,
                  "granule row " + std::to_string(i + 1) + " is all zero");
  }
  return g;
}

Count GranuleFrequencyMatrix::cell(std::size_t granule, std::size_t cls) const {
  if (granule >= granules_ || cls >= classes_)
    throw Error(ErrorCode::IndexOutOfRange, "frequency matrix cell out of range");
  return cells_[granule * classes_ + cls];
}

std::span<const Count> GranuleFrequencyMatrix::row(std::size_t granule) const {
  if (granule >= granules_)
    throw Error(ErrorCode::IndexOutOfRange, "granule index out of range");
  return {cells_.data() + granule * classes_, classes_};
}

std::vector<std::vector<Count>> GranuleFrequencyMatrix::rows() const {
  std::vector<std::vector<Count>> out;
  for (std::size_t i = 0; i < granules_; ++i) {
    auto r = row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

GranuleFrequencyMatrix granule_frequency_matrix(const Partition& granules,
                                                const Partition& decisions) {
  if (granules.universe() != decisions.universe())
    throw Error(ErrorCode::UniverseMismatch, "partitions cover different object sets");
  std::vector<std::vector<Count>> rows(granules.size(),
                                       std::vector<Count>(decisions.size(), 0));
  for (std::size_t i = 0; i < granules.size(); ++i)
    for (ObjectId id : granules.blocks()[i]) ++rows[i][decisions.block_of(id)];
  return GranuleFrequencyMatrix::from_counts(rows);
}

// RoughConfusionMatrix

RoughConfusionMatrix RoughConfusionMatrix::from_counts(
    const std::vector<std::vector<Count>>& rows) {
  RoughConfusionMatrix m;
  m.classes_ = require_rectangular(rows);
  if (rows.size() != m.classes_)
    throw Error(ErrorCode::ShapeMismatch, "confusion matrix must be square");
  m.row_sums_.assign(m.classes_, 0);
  m.col_sums_.assign(m.classes_, 0);
  for (std::size_t i = 0; i < m.classes_; ++i) {
    for (std::size_t j = 0; j < m.classes_; ++j) {
      m.cells_.push_back(rows[i][j]);
      m.row_sums_[i] += rows[i][j];
      m.col_sums_[j] += rows[i][j];
      m.total_ += rows[i][j];
    }
  }
  return m;
}

Count RoughConfusionMatrix::cell(std::size_t predicted, std::size_t actual) const {
  if (predicted >= classes_ || actual >= classes_)
    throw Error(ErrorCode::IndexOutOfRange, "confusion matrix cell out of range");
  return cells_[predicted * classes_ + actual];
}

Count RoughConfusionMatrix::diagonal_sum() const noexcept {
  Count s = 0;
  for (std::size_t i = 0; i < classes_; ++i) s += cells_[i * classes_ + i];
  return s;
}

std::vector<std::vector<Count>> RoughConfusionMatrix::rows() const {
  std::vector<std::vector<Count>> out(classes_);
  for (std::size_t i = 0; i < classes_; ++i)
    out[i].assign(cells_.begin() + static_cast<std::ptrdiff_t>(i * classes_),
                  cells_.begin() + static_cast<std::ptrdiff_t>((i + 1) * classes_));
  return out;
}

ObjectSet predictor_set(const RoughClassifier& f, std::size_t cls,
                        const Partition& granules) {
  if (cls >= f.class_count())
    throw Error(ErrorCode::IndexOutOfRange, "class index " + std::to_string(cls + 1) +
                                                " out of range (k = " +
                                                std::to_string(f.class_count()) + ")");
  if (f.granule_count() != granules.size())
    throw Error(ErrorCode::ShapeMismatch, "classifier covers " +
                                              std::to_string(f.granule_count()) +
                                              " granules, partition has " +
                                              std::to_string(granules.size()));
  std::vector<ObjectId> out;
  for (std::size_t s = 0; s < granules.size(); ++s)
    if (f(s) == cls) out.insert(out.end(), granules.blocks()[s].begin(), granules.blocks()[s].end());
  return ObjectSet(std::move(out));
}

RoughConfusionMatrix confusion_matrix(const GranuleFrequencyMatrix& gfm,
                                      const RoughClassifier& f) {
  if (f.granule_count() != gfm.granule_count() || f.class_count() != gfm.class_count())
    throw Error(ErrorCode::ShapeMismatch,
                "classifier shape " + std::to_string(f.granule_count()) + "x" +
                    std::to_string(f.class_count()) + " does not match frequency matrix " +
                    std::to_string(gfm.granule_count()) + "x" +
                    std::to_string(gfm.class_count()));
  const std::size_t k = gfm.class_count();

  // Relabel each granule row by its predicted class, then order the relabeled
  // rows by label; a stable sort keeps the original granule order inside a label.
  std::vector<std::size_t> order(gfm.granule_count());
  for (std::size_t s = 0; s < order.size(); ++s) order[s] = s;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return f(a) < f(b); });

  // Aggregate; labels with no preimage keep their zero row.
  std::vector<std::vector<Count>> rows(k, std::vector<Count>(k, 0));
  for (std::size_t s : order) {
    auto r = gfm.row(s);
    for (std::size_t j = 0; j < k; ++j) rows[f(s)][j] += r[j];
  }
  return RoughConfusionMatrix::from_counts(rows);
}

}  // namespace roughcm
