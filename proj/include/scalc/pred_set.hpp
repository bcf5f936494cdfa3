#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace scalc {

/// Extensional S-predicate: the set of state indices on which it holds.
class PredSet {
 public:
  PredSet() = default;
  explicit PredSet(std::size_t size, bool value = false);

  static PredSet full(std::size_t size) { return PredSet(size, true); }
  static PredSet none(std::size_t size) { return PredSet(size, false); }

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t k) const noexcept {
    return (words_[k >> 6] >> (k & 63)) & 1U;
  }
  void set(std::size_t k, bool value = true) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (k & 63);
    if (value) {
      words_[k >> 6] |= bit;
    } else {
      words_[k >> 6] &= ~bit;
    }
  }

  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }
  bool is_full() const noexcept { return count() == size_; }
  /// Ascending member indices.
  std::vector<std::size_t> members() const;

  /// Throws SpaceMismatch if sizes differ.
  bool subset_of(const PredSet& other) const;

  PredSet operator~() const;
  PredSet operator&(const PredSet& other) const;
  PredSet operator|(const PredSet& other) const;
  /// Pointwise implication: ~a | b.
  PredSet implies(const PredSet& other) const;

  friend bool operator==(const PredSet&, const PredSet&) = default;

 private:
  void trim() noexcept;
  void check_same(const PredSet& other) const;

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace scalc
