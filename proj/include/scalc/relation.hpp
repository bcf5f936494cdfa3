#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "scalc/state_space.hpp"

namespace scalc {

/// Explicit S-relation over a space of `size()` states, stored row-wise:
/// for each initial state the ascending, duplicate-free list of final states.
class Relation {
 public:
  Relation() : Relation(0) {}
  /// Empty relation over `size` states.
  explicit Relation(std::size_t size);

  static Relation identity(std::size_t size);
  static Relation full(std::size_t size);
  static Relation from_pairs(std::size_t size,
                             std::vector<std::pair<std::size_t, std::size_t>> pairs);

  std::size_t size() const noexcept { return offsets_.size() - 1; }
  std::span<const StateIndex> successors(std::size_t x) const noexcept {
    return {targets_.data() + offsets_[x], targets_.data() + offsets_[x + 1]};
  }
  bool has_successor(std::size_t x) const noexcept {
    return offsets_[x + 1] != offsets_[x];
  }
  bool contains(std::size_t x, std::size_t y) const noexcept;
  std::size_t pair_count() const noexcept { return targets_.size(); }

  /// All pairs in (initial, final) lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  friend class RelationBuilder;
  std::vector<std::size_t> offsets_;
  std::vector<StateIndex> targets_;
};

/// Builds a Relation row by row; rows must be appended for initial states
/// 0, 1, 2, ... in order.
class RelationBuilder {
 public:
  explicit RelationBuilder(std::size_t size);

  /// Appends the successor row of the next initial state. `row` is sorted
  /// and deduplicated in place.
  void add_row(std::vector<StateIndex>& row);
  void add_sorted_row(std::span<const StateIndex> row);
  Relation finish() &&;

 private:
  Relation rel_;
  std::size_t size_;
};

}  // namespace scalc
