#include "scalc/pred_set.hpp"

#include <bit>
#include <string>

#include "scalc/error.hpp"

namespace scalc {

PredSet::PredSet(std::size_t size, bool value)
    : size_(size), words_((size + 63) / 64, value ? ~std::uint64_t{0} : 0) {
  trim();
}

void PredSet::trim() noexcept {
  if (size_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }
}

void PredSet::check_same(const PredSet& other) const {
  if (size_ != other.size_) {
    throw Error(ErrorKind::SpaceMismatch,
                "predicate sets over spaces of size " + std::to_string(size_) +
                    " and " + std::to_string(other.size_));
  }
}

std::size_t PredSet::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::size_t> PredSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

bool PredSet::subset_of(const PredSet& other) const {
  check_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

PredSet PredSet::operator~() const {
  PredSet out = *this;
  for (auto& w : out.words_) w = ~w;
  out.trim();
  return out;
}

PredSet PredSet::operator&(const PredSet& other) const {
  check_same(other);
  PredSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= other.words_[w];
  return out;
}

PredSet PredSet::operator|(const PredSet& other) const {
  check_same(other);
  PredSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] |= other.words_[w];
  return out;
}

PredSet PredSet::implies(const PredSet& other) const { return ~*this | other; }

}  // namespace scalc
