#include "scalc/relation.hpp"

#include <algorithm>
#include <string>

#include "scalc/error.hpp"

namespace scalc {

Relation::Relation(std::size_t size) : offsets_(size + 1, 0) {}

Relation Relation::identity(std::size_t size) {
  Relation r(size);
  r.targets_.resize(size);
  for (std::size_t x = 0; x < size; ++x) {
    r.targets_[x] = static_cast<StateIndex>(x);
    r.offsets_[x + 1] = x + 1;
  }
  return r;
}

Relation Relation::full(std::size_t size) {
  Relation r(size);
  r.targets_.reserve(size * size);
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) r.targets_.push_back(static_cast<StateIndex>(y));
    r.offsets_[x + 1] = r.targets_.size();
  }
  return r;
}

Relation Relation::from_pairs(std::size_t size,
                              std::vector<std::pair<std::size_t, std::size_t>> pairs) {
  for (const auto& [x, y] : pairs) {
    if (x >= size || y >= size) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "pair (" + std::to_string(x) + "," + std::to_string(y) +
                      ") outside a space of " + std::to_string(size) + " states");
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  Relation r(size);
  r.targets_.reserve(pairs.size());
  std::size_t k = 0;
  for (std::size_t x = 0; x < size; ++x) {
    while (k < pairs.size() && pairs[k].first == x) {
      r.targets_.push_back(static_cast<StateIndex>(pairs[k].second));
      ++k;
    }
    r.offsets_[x + 1] = r.targets_.size();
  }
  return r;
}

bool Relation::contains(std::size_t x, std::size_t y) const noexcept {
  auto row = successors(x);
  return std::binary_search(row.begin(), row.end(), static_cast<StateIndex>(y));
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(pair_count());
  for (std::size_t x = 0; x < size(); ++x) {
    for (auto y : successors(x)) out.emplace_back(x, y);
  }
  return out;
}

RelationBuilder::RelationBuilder(std::size_t size) : rel_(size), size_(size) {
  rel_.offsets_.assign(1, 0);
  rel_.offsets_.reserve(size + 1);
}

void RelationBuilder::add_row(std::vector<StateIndex>& row) {
  std::sort(row.begin(), row.end());
  row.erase(std::unique(row.begin(), row.end()), row.end());
  add_sorted_row(row);
}

void RelationBuilder::add_sorted_row(std::span<const StateIndex> row) {
  rel_.targets_.insert(rel_.targets_.end(), row.begin(), row.end());
  rel_.offsets_.push_back(rel_.targets_.size());
}

Relation RelationBuilder::finish() && {
  if (rel_.offsets_.size() - 1 != size_) {
    throw Error(ErrorKind::SpaceMismatch,
                "relation builder got " + std::to_string(rel_.offsets_.size() - 1) +
                    " rows for " + std::to_string(size_) + " states");
  }
  return std::move(rel_);
}

}  // namespace scalc
