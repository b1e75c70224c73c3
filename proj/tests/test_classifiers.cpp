#include "doctest.h"
#include "roughcm/classifiers.hpp"
#include "roughcm/error.hpp"
#include "roughcm/oracle.hpp"
#include "support.hpp"

using namespace roughcm;
using namespace roughcm::testing;

namespace {

GranuleFrequencyMatrix example_gfm() {
  const auto ds = table3();
  return granule_frequency_matrix(partition_by_attributes(ds, kExampleAttributes),
                                  decision_partition(ds));
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

GranuleFrequencyMatrix random_gfm(Rng& rng) {
  const auto ds = random_decision_system(random_config(rng, 16));
  return granule_frequency_matrix(partition_by_attributes(ds, random_attribute_subset(ds, rng)),
                                  decision_partition(ds));
}

}  // namespace

TEST_CASE("RoughClassifier validates its assignment") {
  CHECK(code_of([] { RoughClassifier({0, 2}, 2); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { RoughClassifier({}, 2); }) == ErrorCode::InvalidArgument);
  CHECK(example_classifier()(3) == 0);
  CHECK_THROWS_AS(example_classifier()(4), Error);
}

TEST_CASE("validate_overlap") {
  const auto gfm = example_gfm();
  CHECK(validate_overlap(example_classifier(), gfm).satisfies_rule());

  const auto bad = validate_overlap(RoughClassifier({0, 1, 1, 1}, 2), gfm);
  CHECK_FALSE(bad.satisfies_rule());
  CHECK(bad.violations == std::vector<std::size_t>{3});

  const auto worse = validate_overlap(RoughClassifier({0, 0, 0, 1}, 2), gfm);
  CHECK(worse.violations == std::vector<std::size_t>{1, 2, 3});

  CHECK_THROWS_AS(validate_overlap(RoughClassifier({0, 1}, 2), gfm), Error);
}

TEST_CASE("maximal_row_classifier") {
  const auto gfm = example_gfm();
  CHECK(maximal_row_classifier(gfm) == RoughClassifier({0, 1, 1, 0}, 2));
  CHECK(maximal_row_classifier(gfm, {TieBreak::Kind::Highest}) == RoughClassifier({1, 1, 1, 0}, 2));

  const auto tied = GranuleFrequencyMatrix::from_counts({{0, 5, 5}, {1, 0, 0}});
  CHECK(maximal_row_classifier(tied, {TieBreak::Kind::Lowest})(0) == 1);
  CHECK(maximal_row_classifier(tied, {TieBreak::Kind::Highest})(0) == 2);

  SUBCASE("seeded random tie breaking is reproducible") {
    const auto wide = GranuleFrequencyMatrix::from_counts(
        {{2, 2, 2}, {1, 1, 0}, {0, 3, 3}, {4, 4, 4}, {1, 1, 1}, {5, 0, 5}});
    const TieBreak t{TieBreak::Kind::SeededRandom, 99};
    const auto a = maximal_row_classifier(wide, t);
    CHECK(a == maximal_row_classifier(wide, t));
    CHECK(is_row_maximal(a, wide));
    CHECK(validate_overlap(a, wide).satisfies_rule());

    bool differs = false;
    for (std::uint64_t seed = 0; seed < 32 && !differs; ++seed)
      differs = maximal_row_classifier(wide, {TieBreak::Kind::SeededRandom, seed}) != a;
    CHECK(differs);
  }
}

TEST_CASE("tie-break names") {
  CHECK(to_string(TieBreak::Kind::Lowest) == "lowest");
  CHECK(parse_tie_break("highest") == TieBreak::Kind::Highest);
  CHECK(parse_tie_break("random") == TieBreak::Kind::SeededRandom);
  CHECK(code_of([] { parse_tie_break("first"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("success_ratio") {
  const auto gfm = example_gfm();
  CHECK(success_ratio(confusion_matrix(gfm, example_classifier())) == Rational(5, 6));
  CHECK(success_ratio(RoughConfusionMatrix::from_counts({{2, 0}, {0, 2}})) == Rational(1));
  CHECK(success_ratio(RoughConfusionMatrix::from_counts({{0, 2}, {2, 0}})) == Rational(0));
}

TEST_CASE("classifier mapping files") {
  const auto f = parse_classifier_mapping("# comment\n1 1\n2 2\n\n3 2  # trailing\n4 1\n", 4, 2);
  CHECK(f == example_classifier());
  CHECK(format_classifier_mapping(f) == "# granule class\n1 1\n2 2\n3 2\n4 1\n");
  CHECK(parse_classifier_mapping(format_classifier_mapping(f), 4, 2) == f);

  CHECK(code_of([] { parse_classifier_mapping("1 1\n2 2\n3 2\n", 4, 2); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_classifier_mapping("1 1\n1 2\n2 2\n3 2\n4 1\n", 4, 2); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_classifier_mapping("1 1\n2 2\n3 3\n4 1\n", 4, 2); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_classifier_mapping("1 1\n2 2\n3 2\n5 1\n", 4, 2); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_classifier_mapping("1 1\n2 x\n3 2\n4 1\n", 4, 2); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_classifier_mapping("1 1\n2 2\n3 2\n4\n", 4, 2); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_classifier_mapping("0 1\n", 1, 2); }) == ErrorCode::Parse);

  try {
    parse_classifier_mapping("1 1\n2 2\n3 9\n4 1\n", 4, 2);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("mrc properties on random matrices") {
  Rng rng(314159);
  for (int trial = 0; trial < 400; ++trial) {
    const auto gfm = random_gfm(rng);
    CAPTURE(trial);
    for (auto kind : {TieBreak::Kind::Lowest, TieBreak::Kind::Highest, TieBreak::Kind::SeededRandom}) {
      const auto f = maximal_row_classifier(gfm, {kind, rng.next()});
      CHECK(validate_overlap(f, gfm).satisfies_rule());
      CHECK(is_row_maximal(f, gfm));

      const auto cm = confusion_matrix(gfm, f);
      for (std::size_t i = 0; i < cm.class_count(); ++i) {
        if (cm.cell(i, i) == 0) CHECK(cm.row_sums()[i] == 0);
        if (cm.row_sums()[i] > 0) CHECK(cm.cell(i, i) > 0);
      }

      // no other classifier beats it
      double k_pow_m = 1;
      for (std::size_t i = 0; i < gfm.granule_count(); ++i) k_pow_m *= double(gfm.class_count());
      if (k_pow_m <= 4096)
        CHECK(success_ratio(cm) == exhaustive_best_classifier(gfm).success_ratio);
    }

    // scaling every count leaves the argmax alone
    auto rows = gfm.rows();
    for (auto& r : rows)
      for (auto& c : r) c *= 3;
    CHECK(maximal_row_classifier(GranuleFrequencyMatrix::from_counts(rows)) ==
          maximal_row_classifier(gfm));
  }
}
