#pragma once

#include <string>
#include <vector>

#include "roughcm/classifiers.hpp"
#include "roughcm/core.hpp"
#include "roughcm/oracle.hpp"
#include "roughcm/rng.hpp"

namespace roughcm::testing {

// The six-object television table used throughout the tests.
inline DecisionSystem table3() {
  return DecisionSystem(
      {1, 2, 3, 4, 5, 6},
      {{"Price", {"high", "low", "low", "medium", "medium", "high"}},
       {"Guarantee", {"24 months", "6 months", "12 months", "12 months", "18 months", "12 months"}},
       {"Sound", {"Stereo", "Mono", "Stereo", "Stereo", "Stereo", "Stereo"}},
       {"Screen", {"76", "66", "36", "51", "51", "51"}}},
      {"d", {"high", "low", "low", "high", "high", "low"}});
}

// Induces X1 = {1,6}, X2 = {2}, X3 = {3}, X4 = {4,5} on table3().
inline const std::vector<std::string> kExampleAttributes{"Price", "Sound"};

// f(X1) = f(X4) = Y1, f(X2) = f(X3) = Y2 (0-based).
inline RoughClassifier example_classifier() { return RoughClassifier({0, 1, 1, 0}, 2); }

// Blocks computed by comparing every pair of rows on `attributes`, without
// grouping: object r joins the block of the first earlier row it agrees with.
inline std::vector<std::vector<ObjectId>> pairwise_blocks(const DecisionSystem& ds,
                                                          const std::vector<std::string>& attributes) {
  const std::size_t n = ds.object_count();
  std::vector<std::size_t> leader(n);
  for (std::size_t r = 0; r < n; ++r) {
    leader[r] = r;
    for (std::size_t s = 0; s < r; ++s) {
      bool same = true;
      for (const auto& a : attributes) same = same && ds.condition(a).values[r] == ds.condition(a).values[s];
      if (same) {
        leader[r] = leader[s];
        break;
      }
    }
  }
  std::vector<std::vector<ObjectId>> blocks;
  for (std::size_t r = 0; r < n; ++r) {
    if (leader[r] != r) continue;
    std::vector<ObjectId> block;
    for (std::size_t s = 0; s < n; ++s)
      if (leader[s] == r) block.push_back(ds.object_ids()[s]);
    blocks.push_back(block);
  }
  return blocks;
}

inline GeneratorConfig random_config(Rng& rng, std::size_t max_objects = 20) {
  GeneratorConfig cfg;
  cfg.n_objects = rng.between(2, max_objects);
  cfg.n_attributes = rng.between(1, 4);
  cfg.values_per_attribute = rng.between(1, 4);
  cfg.n_decision_values = rng.between(2, std::min<std::size_t>(4, cfg.n_objects));
  cfg.seed = rng.next();
  return cfg;
}

inline ObjectSet random_subset(const ObjectSet& universe, Rng& rng) {
  std::vector<ObjectId> out;
  for (ObjectId id : universe)
    if (rng.below(2) == 1) out.push_back(id);
  return ObjectSet(std::move(out));
}

inline std::vector<std::string> random_attribute_subset(const DecisionSystem& ds, Rng& rng) {
  std::vector<std::string> out;
  for (const auto& name : ds.condition_names())
    if (rng.below(2) == 1) out.push_back(name);
  if (out.empty()) out.push_back(ds.condition_names().front());
  return out;
}

}  // namespace roughcm::testing
