#include <algorithm>

#include "doctest.h"
#include "roughcm/classifiers.hpp"
#include "roughcm/error.hpp"
#include "roughcm/matrices.hpp"
#include "support.hpp"

using namespace roughcm;
using namespace roughcm::testing;

namespace {

using Rows = std::vector<std::vector<Count>>;

GranuleFrequencyMatrix example_gfm() {
  const auto ds = table3();
  return granule_frequency_matrix(partition_by_attributes(ds, kExampleAttributes),
                                  decision_partition(ds));
}

}  // namespace

TEST_CASE("granule frequency matrix of the worked example") {
  const auto gfm = example_gfm();
  CHECK(gfm.rows() == Rows{{1, 1}, {0, 1}, {0, 1}, {2, 0}});
  CHECK(gfm.granule_sizes() == std::vector<Count>{2, 1, 1, 2});
  CHECK(gfm.class_sizes() == std::vector<Count>{3, 3});
  CHECK(gfm.total() == 6);
}

TEST_CASE("granule frequency matrix special shapes") {
  const auto ds = table3();
  const auto decisions = decision_partition(ds);

  const auto same = granule_frequency_matrix(decisions, decisions);
  CHECK(same.rows() == Rows{{3, 0}, {0, 3}});

  const auto singletons = granule_frequency_matrix(
      partition_by_attributes(ds, ds.condition_names()), decisions);
  for (std::size_t i = 0; i < singletons.granule_count(); ++i) {
    auto row = singletons.row(i);
    CHECK(std::count(row.begin(), row.end(), Count{1}) == 1);
    CHECK(std::count(row.begin(), row.end(), Count{0}) == 1);
  }

  CHECK_THROWS_AS(granule_frequency_matrix(Partition({{1, 2}}), decisions), Error);
  CHECK_THROWS_AS(GranuleFrequencyMatrix::from_counts({{1, 0}, {0, 0}}), Error);
  CHECK_THROWS_AS(GranuleFrequencyMatrix::from_counts({{1, 0}, {1}}), Error);
}

TEST_CASE("predictor sets") {
  const auto ds = table3();
  const auto granules = partition_by_attributes(ds, kExampleAttributes);
  const auto f = example_classifier();
  CHECK(predictor_set(f, 0, granules) == ObjectSet{1, 4, 5, 6});
  CHECK(predictor_set(f, 1, granules) == ObjectSet{2, 3});
  CHECK(predictor_set(RoughClassifier({0, 0, 0, 0}, 2), 1, granules).empty());
  CHECK_THROWS_AS(predictor_set(f, 2, granules), Error);
}

TEST_CASE("confusion matrix construction") {
  const auto gfm = example_gfm();

  const auto cm = confusion_matrix(gfm, example_classifier());
  CHECK(cm.rows() == Rows{{3, 1}, {0, 2}});
  CHECK(cm.row_sums() == std::vector<Count>{4, 2});
  CHECK(cm.col_sums() == std::vector<Count>{3, 3});
  CHECK(cm.total() == 6);

  const auto all_first = confusion_matrix(gfm, RoughClassifier({0, 0, 0, 0}, 2));
  CHECK(all_first.rows() == Rows{{3, 3}, {0, 0}});

  const auto diag_gfm = GranuleFrequencyMatrix::from_counts({{3, 0}, {0, 3}});
  CHECK(confusion_matrix(diag_gfm, RoughClassifier({0, 1}, 2)).rows() == Rows{{3, 0}, {0, 3}});

  CHECK_THROWS_AS(confusion_matrix(gfm, RoughClassifier({0, 1}, 2)), Error);
}

TEST_CASE("confusion matrix properties") {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ds = random_decision_system(random_config(rng));
    const auto gfm = granule_frequency_matrix(
        partition_by_attributes(ds, random_attribute_subset(ds, rng)), decision_partition(ds));
    std::vector<std::size_t> assignment;
    for (std::size_t i = 0; i < gfm.granule_count(); ++i)
      assignment.push_back(rng.below(gfm.class_count()));
    const RoughClassifier f(assignment, gfm.class_count());
    const auto cm = confusion_matrix(gfm, f);
    CAPTURE(trial);

    CHECK(cm.total() == gfm.total());
    CHECK(cm.col_sums() == gfm.class_sizes());
    for (std::size_t i = 0; i < cm.class_count(); ++i) {
      CHECK(cm.cell(i, i) <= gfm.class_sizes()[i]);
      const bool predicted = std::find(assignment.begin(), assignment.end(), i) != assignment.end();
      CHECK((cm.row_sums()[i] == 0) == !predicted);
    }

    // permuting granule rows (and the classifier with them) changes nothing
    std::vector<std::size_t> perm(gfm.granule_count());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    std::vector<std::vector<Count>> rows;
    std::vector<std::size_t> permuted;
    for (std::size_t i : perm) {
      auto r = gfm.row(i);
      rows.emplace_back(r.begin(), r.end());
      permuted.push_back(assignment[i]);
    }
    CHECK(confusion_matrix(GranuleFrequencyMatrix::from_counts(rows),
                           RoughClassifier(permuted, gfm.class_count())) == cm);

    // under the overlap condition an empty diagonal cell means an empty row
    const auto validated = random_validated_classifier(gfm, rng);
    const auto vcm = confusion_matrix(gfm, validated);
    for (std::size_t i = 0; i < vcm.class_count(); ++i)
      if (vcm.cell(i, i) == 0) CHECK(vcm.row_sums()[i] == 0);
  }
}
