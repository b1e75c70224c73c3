#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace roughcm {

using ObjectId = std::uint64_t;

/// Sorted, duplicate-free set of object ids.
class ObjectSet {
 public:
  ObjectSet() = default;
  explicit ObjectSet(std::vector<ObjectId> members);
  ObjectSet(std::initializer_list<ObjectId> members)
      : ObjectSet(std::vector<ObjectId>(members)) {}

  const std::vector<ObjectId>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(ObjectId id) const;
  bool is_subset_of(const ObjectSet& other) const;
  bool intersects(const ObjectSet& other) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const ObjectSet&, const ObjectSet&) = default;

 private:
  std::vector<ObjectId> members_;
};

ObjectSet set_union(const ObjectSet& a, const ObjectSet& b);
ObjectSet set_intersection(const ObjectSet& a, const ObjectSet& b);
ObjectSet set_difference(const ObjectSet& a, const ObjectSet& b);

/// A named attribute; values[r] belongs to the r-th object of the owning
/// DecisionSystem. Values are opaque tokens compared for equality only.
struct Attribute {
  std::string name;
  std::vector<std::string> values;
};

/// Objects, condition attributes and one decision attribute. Immutable once
/// constructed; the constructor enforces totality, unique ids and k >= 2.
class DecisionSystem {
 public:
  DecisionSystem(std::vector<ObjectId> object_ids,
                 std::vector<Attribute> conditions, Attribute decision);

  std::size_t object_count() const noexcept { return object_ids_.size(); }
  const std::vector<ObjectId>& object_ids() const noexcept { return object_ids_; }
  const std::vector<Attribute>& condition_attributes() const noexcept {
    return conditions_;
  }
  const Attribute& decision_attribute() const noexcept { return decision_; }

  /// Throws UnknownAttribute.
  const Attribute& condition(std::string_view name) const;
  std::vector<std::string> condition_names() const;
  ObjectSet universe() const { return ObjectSet(object_ids_); }

 private:
  std::vector<ObjectId> object_ids_;
  std::vector<Attribute> conditions_;
  Attribute decision_;
};

/// A partition of a finite object set into nonempty, pairwise disjoint
/// blocks, kept in canonical order (ascending least member).
class Partition {
 public:
  explicit Partition(std::vector<std::vector<ObjectId>> blocks);

  const std::vector<ObjectSet>& blocks() const noexcept { return blocks_; }
  const ObjectSet& block(std::size_t index) const;
  std::size_t size() const noexcept { return blocks_.size(); }
  const ObjectSet& universe() const noexcept { return universe_; }

  /// Index of the block holding `id`; throws UniverseMismatch.
  std::size_t block_of(ObjectId id) const;

  /// Throws UniverseMismatch unless `set` lies inside the universe.
  void require_within(const ObjectSet& set) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  std::vector<ObjectSet> blocks_;
  ObjectSet universe_;
  std::vector<std::size_t> block_index_;  // parallel to universe_ members
};

Partition partition_by_attributes(const DecisionSystem& ds,
                                  std::span<const std::string> attributes);

/// Decision classes Y_1..Y_k. Throws DegenerateDecision when k < 2.
Partition decision_partition(const DecisionSystem& ds);

/// Decision value token of each decision class, in partition order.
std::vector<std::string> decision_labels(const DecisionSystem& ds,
                                         const Partition& decisions);

ObjectSet lower_approximation(const Partition& p, const ObjectSet& y);
ObjectSet upper_approximation(const Partition& p, const ObjectSet& y);
bool is_definable(const Partition& p, const ObjectSet& y);

/// Union of the granules lying inside a single decision class.
ObjectSet deterministic_region(const Partition& granules,
                               const Partition& decisions);

}  // namespace roughcm
