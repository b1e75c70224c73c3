#include "doctest.h"
#include "roughcm/core.hpp"
#include "roughcm/error.hpp"
#include "roughcm/oracle.hpp"
#include "support.hpp"

using namespace roughcm;
using namespace roughcm::testing;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

Partition example_partition() { return partition_by_attributes(table3(), kExampleAttributes); }

}  // namespace

TEST_CASE("ObjectSet sorts and deduplicates") {
  ObjectSet s{5, 1, 3, 1};
  CHECK(s.members() == std::vector<ObjectId>{1, 3, 5});
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(ObjectSet{1, 5}.is_subset_of(s));
  CHECK_FALSE(ObjectSet{1, 2}.is_subset_of(s));
  CHECK(set_difference(s, ObjectSet{3}) == ObjectSet{1, 5});
}

TEST_CASE("DecisionSystem rejects malformed input") {
  CHECK(code_of([] { DecisionSystem({}, {}, {"d", {}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { DecisionSystem({1, 1}, {{"a", {"x", "y"}}}, {"d", {"p", "q"}}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { DecisionSystem({1, 2}, {{"a", {"x"}}}, {"d", {"p", "q"}}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { DecisionSystem({1, 2}, {{"a", {"x", "y"}}, {"a", {"x", "y"}}}, {"d", {"p", "q"}}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { DecisionSystem({1, 2}, {{"a", {"x", "y"}}}, {"d", {"p", "p"}}); }) ==
        ErrorCode::DegenerateDecision);
}

TEST_CASE("partition_by_attributes") {
  const auto ds = table3();

  SUBCASE("Price and Sound give the worked-example granules") {
    CHECK(example_partition() == Partition({{1, 6}, {2}, {3}, {4, 5}}));
  }

  SUBCASE("Price and Screen split rows 1 and 6 (Screen 76 vs 51)") {
    const std::vector<std::string> q{"Price", "Screen"};
    const auto p = partition_by_attributes(ds, q);
    CHECK(p == Partition(pairwise_blocks(ds, q)));
    CHECK(p == Partition({{1}, {2}, {3}, {4, 5}, {6}}));
  }

  SUBCASE("all four attributes separate every row") {
    const auto all = ds.condition_names();
    const auto p = partition_by_attributes(ds, all);
    CHECK(p == Partition(pairwise_blocks(ds, all)));
    CHECK(p.size() == 6);
  }

  SUBCASE("constant attributes give one block") {
    DecisionSystem flat({1, 2, 3}, {{"c", {"z", "z", "z"}}}, {"d", {"p", "q", "p"}});
    const std::vector<std::string> q{"c"};
    CHECK(partition_by_attributes(flat, q) == Partition({{1, 2, 3}}));
  }

  SUBCASE("errors") {
    const std::vector<std::string> unknown{"Price", "Colour"};
    CHECK(code_of([&] { partition_by_attributes(ds, unknown); }) == ErrorCode::UnknownAttribute);
    CHECK(code_of([&] { partition_by_attributes(ds, std::vector<std::string>{}); }) ==
          ErrorCode::InvalidArgument);
  }
}

TEST_CASE("decision_partition") {
  CHECK(decision_partition(table3()) == Partition({{1, 4, 5}, {2, 3, 6}}));
  CHECK(decision_labels(table3(), decision_partition(table3())) ==
        std::vector<std::string>{"high", "low"});

  DecisionSystem two({1, 2}, {{"a", {"x", "x"}}}, {"d", {"a", "b"}});
  CHECK(decision_partition(two) == Partition({{1}, {2}}));

  DecisionSystem four({1, 2, 3, 4}, {{"a", {"x", "x", "y", "y"}}}, {"d", {"a", "a", "b", "b"}});
  CHECK(decision_partition(four) == Partition({{1, 2}, {3, 4}}));
}

TEST_CASE("Partition canonicalizes and validates blocks") {
  Partition p({{9, 4}, {2, 7}, {5}});
  CHECK(p.blocks()[0] == ObjectSet{2, 7});
  CHECK(p.blocks()[1] == ObjectSet{4, 9});
  CHECK(p.blocks()[2] == ObjectSet{5});
  CHECK(p.block_of(9) == 1);
  CHECK(code_of([&] { (void)p.block_of(3); }) == ErrorCode::UniverseMismatch);
  CHECK(code_of([] { Partition({{1, 2}, {2, 3}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { Partition({{1}, {}}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("approximations on the worked example") {
  const auto p = example_partition();
  const ObjectSet y1{1, 4, 5};
  CHECK(lower_approximation(p, y1) == ObjectSet{4, 5});
  CHECK(upper_approximation(p, y1) == ObjectSet{1, 4, 5, 6});
  CHECK(lower_approximation(p, {}) == ObjectSet{});
  CHECK(upper_approximation(p, {}) == ObjectSet{});
  CHECK(lower_approximation(p, p.universe()) == p.universe());
  CHECK(upper_approximation(p, p.universe()) == p.universe());

  CHECK(is_definable(p, ObjectSet{2, 3}));
  CHECK_FALSE(is_definable(p, y1));
  CHECK(is_definable(p, ObjectSet{}));

  CHECK(code_of([&] { lower_approximation(p, ObjectSet{1, 99}); }) == ErrorCode::UniverseMismatch);
  CHECK(code_of([&] { upper_approximation(p, ObjectSet{0}); }) == ErrorCode::UniverseMismatch);
  CHECK(code_of([&] { is_definable(p, ObjectSet{7}); }) == ErrorCode::UniverseMismatch);
}

TEST_CASE("deterministic_region") {
  const auto ds = table3();
  const auto decisions = decision_partition(ds);
  CHECK(deterministic_region(example_partition(), decisions) == ObjectSet{2, 3, 4, 5});
  CHECK(deterministic_region(decisions, decisions) == decisions.universe());

  DecisionSystem flat({1, 2, 3}, {{"c", {"z", "z", "z"}}}, {"d", {"p", "q", "p"}});
  const std::vector<std::string> q{"c"};
  CHECK(deterministic_region(partition_by_attributes(flat, q), decision_partition(flat)).empty());

  CHECK(code_of([&] { deterministic_region(Partition({{1, 2}}), decisions); }) ==
        ErrorCode::UniverseMismatch);
}

TEST_CASE("approximation properties on random systems") {
  Rng rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ds = random_decision_system(random_config(rng));
    const auto q = random_attribute_subset(ds, rng);
    const auto p = partition_by_attributes(ds, q);
    const ObjectSet& u = p.universe();
    const ObjectSet y = random_subset(u, rng);
    const ObjectSet y_wider = set_union(y, random_subset(u, rng));
    CAPTURE(trial);

    const auto low = lower_approximation(p, y);
    const auto upp = upper_approximation(p, y);
    CHECK(low.is_subset_of(y));
    CHECK(y.is_subset_of(upp));
    CHECK(is_definable(p, low));
    CHECK(is_definable(p, upp));
    CHECK(low.is_subset_of(lower_approximation(p, y_wider)));
    CHECK(upp.is_subset_of(upper_approximation(p, y_wider)));
    CHECK(upp == set_difference(u, lower_approximation(p, set_difference(u, y))));

    // per-element membership: x in Low(Y) iff its block is inside Y
    for (ObjectId x : u) {
      const ObjectSet& block = p.blocks()[p.block_of(x)];
      CHECK(low.contains(x) == block.is_subset_of(y));
      CHECK(upp.contains(x) == block.intersects(y));
    }

    // the deterministic region is the union of the class lower approximations
    const auto decisions = decision_partition(ds);
    ObjectSet lowers;
    for (const auto& cls : decisions.blocks()) lowers = set_union(lowers, lower_approximation(p, cls));
    CHECK(deterministic_region(p, decisions) == lowers);

    // adding attributes only refines
    const auto finer = partition_by_attributes(ds, ds.condition_names());
    for (const auto& block : finer.blocks())
      CHECK(block.is_subset_of(p.blocks()[p.block_of(block.members().front())]));
  }
}
