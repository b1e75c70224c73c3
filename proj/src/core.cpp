#include "roughcm/core.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <string_view>

#include "roughcm/error.hpp"

namespace roughcm {

ObjectSet::ObjectSet(std::vector<ObjectId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool ObjectSet::contains(ObjectId id) const {
  return std::binary_search(members_.begin(), members_.end(), id);
}

bool ObjectSet::is_subset_of(const ObjectSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

bool ObjectSet::intersects(const ObjectSet& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

ObjectSet set_union(const ObjectSet& a, const ObjectSet& b) {
  std::vector<ObjectId> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ObjectSet(std::move(out));
}

ObjectSet set_intersection(const ObjectSet& a, const ObjectSet& b) {
  std::vector<ObjectId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ObjectSet(std::move(out));
}

ObjectSet set_difference(const ObjectSet& a, const ObjectSet& b) {
  std::vector<ObjectId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ObjectSet(std::move(out));
}

// DecisionSystem

DecisionSystem::DecisionSystem(std::vector<ObjectId> object_ids,
                               std::vector<Attribute> conditions, Attribute decision)
    : object_ids_(std::move(object_ids)),
      conditions_(std::move(conditions)),
      decision_(std::move(decision)) {
  const std::size_t n = object_ids_.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "decision system has no objects");

  std::set<ObjectId> seen;
  for (ObjectId id : object_ids_) {
    if (!seen.insert(id).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate object id " + std::to_string(id));
  }

  std::set<std::string_view> names;
  auto check = [&](const Attribute& a) {
    if (a.name.empty()) throw Error(ErrorCode::InvalidArgument, "attribute with empty name");
    if (!names.insert(a.name).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate attribute name '" + a.name + "'");
    if (a.values.size() != n)
      throw Error(ErrorCode::InvalidArgument,
                  "attribute '" + a.name + "' has " + std::to_string(a.values.size()) +
                      " values for " + std::to_string(n) + " objects");
  };
  for (const auto& a : conditions_) check(a);
  check(decision_);

  std::set<std::string_view> decisions(decision_.values.begin(), decision_.values.end());
  if (decisions.size() < 2)
    throw Error(ErrorCode::DegenerateDecision,
                "decision attribute '" + decision_.name + "' takes fewer than 2 distinct values");
}

const Attribute& DecisionSystem::condition(std::string_view name) const {
  for (const auto& a : conditions_)
    if (a.name == name) return a;
  throw Error(ErrorCode::UnknownAttribute,
              "unknown condition attribute '" + std::string(name) + "'");
}

std::vector<std::string> DecisionSystem::condition_names() const {
  std::vector<std::string> out;
  out.reserve(conditions_.size());
  for (const auto& a : conditions_) out.push_back(a.name);
  return out;
}

// Partition

Partition::Partition(std::vector<std::vector<ObjectId>> blocks) {
  blocks_.reserve(blocks.size());
  for (auto& b : blocks) {
    ObjectSet s(std::move(b));
    if (s.empty()) throw Error(ErrorCode::InvalidArgument, "partition block is empty");
    blocks_.push_back(std::move(s));
  }
  if (blocks_.empty()) throw Error(ErrorCode::InvalidArgument, "partition has no blocks");
  std::sort(blocks_.begin(), blocks_.end(), [](const ObjectSet& a, const ObjectSet& b) {
    return a.members().front() < b.members().front();
  });

  std::vector<std::pair<ObjectId, std::size_t>> owner;
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (ObjectId id : blocks_[i]) owner.emplace_back(id, i);
  std::sort(owner.begin(), owner.end());
  std::vector<ObjectId> ids;
  ids.reserve(owner.size());
  block_index_.reserve(owner.size());
  for (std::size_t i = 0; i < owner.size(); ++i) {
    if (i > 0 && owner[i].first == owner[i - 1].first)
      throw Error(ErrorCode::InvalidArgument,
                  "object " + std::to_string(owner[i].first) + " appears in two blocks");
    ids.push_back(owner[i].first);
    block_index_.push_back(owner[i].second);
  }
  universe_ = ObjectSet(std::move(ids));
}

const ObjectSet& Partition::block(std::size_t index) const {
  if (index >= blocks_.size())
    throw Error(ErrorCode::IndexOutOfRange, "block index " + std::to_string(index) +
                                                " out of range (" +
                                                std::to_string(blocks_.size()) + " blocks)");
  return blocks_[index];
}

std::size_t Partition::block_of(ObjectId id) const {
  const auto& ids = universe_.members();
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id)
    throw Error(ErrorCode::UniverseMismatch,
                "object " + std::to_string(id) + " is not in the partition's universe");
  return block_index_[static_cast<std::size_t>(it - ids.begin())];
}

void Partition::require_within(const ObjectSet& set) const {
  for (ObjectId id : set) {
    if (!universe_.contains(id))
      throw Error(ErrorCode::UniverseMismatch,
                  "object " + std::to_string(id) + " is not in the partition's universe");
  }
}

namespace {

Partition group_rows(const DecisionSystem& ds,
                     const std::vector<const Attribute*>& columns) {
  std::map<std::vector<std::string_view>, std::vector<ObjectId>> groups;
  const auto& ids = ds.object_ids();
  for (std::size_t r = 0; r < ids.size(); ++r) {
    std::vector<std::string_view> key;
    key.reserve(columns.size());
    for (const Attribute* a : columns) key.emplace_back(a->values[r]);
    groups[std::move(key)].push_back(ids[r]);
  }
  std::vector<std::vector<ObjectId>> blocks;
  blocks.reserve(groups.size());
  for (auto& [key, members] : groups) blocks.push_back(std::move(members));
  return Partition(std::move(blocks));
}

void require_same_universe(const Partition& a, const Partition& b) {
  if (a.universe() != b.universe())
    throw Error(ErrorCode::UniverseMismatch, "partitions cover different object sets");
}

}  // namespace

Partition partition_by_attributes(const DecisionSystem& ds,
                                  std::span<const std::string> attributes) {
  if (attributes.empty())
    throw Error(ErrorCode::InvalidArgument, "attribute set must not be empty");
  std::vector<const Attribute*> columns;
  for (const auto& name : attributes) columns.push_back(&ds.condition(name));
  return group_rows(ds, columns);
}

Partition decision_partition(const DecisionSystem& ds) {
  Partition p = group_rows(ds, {&ds.decision_attribute()});
  if (p.size() < 2)
    throw Error(ErrorCode::DegenerateDecision, "all objects share one decision value");
  return p;
}

std::vector<std::string> decision_labels(const DecisionSystem& ds,
                                         const Partition& decisions) {
  const auto& ids = ds.object_ids();
  std::vector<std::string> labels;
  labels.reserve(decisions.size());
  for (const auto& block : decisions.blocks()) {
    auto it = std::find(ids.begin(), ids.end(), block.members().front());
    if (it == ids.end())
      throw Error(ErrorCode::UniverseMismatch, "decision partition does not match the system");
    labels.push_back(ds.decision_attribute().values[static_cast<std::size_t>(it - ids.begin())]);
  }
  return labels;
}

ObjectSet lower_approximation(const Partition& p, const ObjectSet& y) {
  p.require_within(y);
  std::vector<ObjectId> out;
  for (const auto& block : p.blocks())
    if (block.is_subset_of(y)) out.insert(out.end(), block.begin(), block.end());
  return ObjectSet(std::move(out));
}

ObjectSet upper_approximation(const Partition& p, const ObjectSet& y) {
  p.require_within(y);
  std::vector<ObjectId> out;
  for (const auto& block : p.blocks())
    if (block.intersects(y)) out.insert(out.end(), block.begin(), block.end());
  return ObjectSet(std::move(out));
}

bool is_definable(const Partition& p, const ObjectSet& y) {
  return lower_approximation(p, y) == y;
}

ObjectSet deterministic_region(const Partition& granules, const Partition& decisions) {
  require_same_universe(granules, decisions);
  std::vector<ObjectId> out;
  for (const auto& g : granules.blocks()) {
    const std::size_t cls = decisions.block_of(g.members().front());
    if (g.is_subset_of(decisions.blocks()[cls])) out.insert(out.end(), g.begin(), g.end());
  }
  return ObjectSet(std::move(out));
}

}  // namespace roughcm
