#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace scalc {

using Value = std::int64_t;
using StateIndex = std::uint32_t;

inline constexpr Value kDefaultIntMin = -128;
inline constexpr Value kDefaultIntMax = 127;
inline constexpr std::uint64_t kDefaultMaxStates = std::uint64_t{1} << 24;

/// Finite, strictly increasing set of values a variable may take.
class Domain {
 public:
  /// Throws EmptyDomain when `values` is empty and InvalidDomain when it is
  /// not strictly increasing.
  Domain(std::string name, std::vector<Value> values);

  static Domain range(std::string name, Value lo, Value hi);
  static Domain boolean() { return range("bool", 0, 1); }
  static Domain integer(Value lo = kDefaultIntMin, Value hi = kDefaultIntMax) {
    return range("int", lo, hi);
  }

  const std::string& name() const noexcept { return name_; }
  std::span<const Value> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  Value at(std::size_t k) const { return values_[k]; }
  Value min() const noexcept { return values_.front(); }
  Value max() const noexcept { return values_.back(); }

  /// Position of `v` in the domain, or nullopt if `v` is not a member.
  std::optional<std::size_t> position(Value v) const noexcept;
  bool contains(Value v) const noexcept { return position(v).has_value(); }

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  std::string name_;
  std::vector<Value> values_;
  bool contiguous_ = false;
};

struct Variable {
  std::string name;
  Domain domain;
};

/// Ordered set of program variables; all state indexing follows this order.
class VarUniverse {
 public:
  VarUniverse() = default;
  explicit VarUniverse(std::vector<Variable> vars);

  void add(std::string name, Domain domain);

  std::size_t size() const noexcept { return vars_.size(); }
  bool empty() const noexcept { return vars_.empty(); }
  const Variable& operator[](std::size_t k) const { return vars_[k]; }
  std::span<const Variable> vars() const noexcept { return vars_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws UnknownVariable.
  std::size_t index_of(std::string_view name) const;

 private:
  std::vector<Variable> vars_;
  std::unordered_map<std::string, std::size_t> by_name_;
};

/// Total valuation of a universe, values in universe order.
struct State {
  std::vector<Value> values;

  friend bool operator==(const State&, const State&) = default;
};

/// The interpreted state space: every valuation of a universe, enumerated
/// row-major with the last variable varying fastest.
class StateSpace {
 public:
  StateSpace() : StateSpace(VarUniverse{}) {}
  explicit StateSpace(VarUniverse universe,
                      std::uint64_t max_states = kDefaultMaxStates);

  /// Space of exactly `n` states over one variable `s` with domain 0..n-1.
  /// Used where only the cardinality matters.
  static StateSpace abstract(std::size_t n);

  const VarUniverse& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return size_; }

  State index_to_state(std::size_t k) const;
  std::size_t state_to_index(const State& s) const;

  /// Value of variable `var` in the state with index `k`, without
  /// materializing the whole state.
  Value value_at(std::size_t k, std::size_t var) const {
    return universe_[var].domain.at((k / strides_[var]) % universe_[var].domain.size());
  }

  /// Index of the state equal to state `k` except variable `var` holds the
  /// domain element at position `pos`.
  std::size_t with_value(std::size_t k, std::size_t var, std::size_t pos) const {
    const std::size_t stride = strides_[var];
    const std::size_t cur = (k / stride) % universe_[var].domain.size();
    return k - cur * stride + pos * stride;
  }

  /// Human-oriented rendering such as `{a=5, b=1}`.
  std::string format_state(std::size_t k) const;

 private:
  VarUniverse universe_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

/// Builds the space for `universe`; throws SpaceTooLarge if the product of
/// domain sizes exceeds `max_states`.
StateSpace build_space(VarUniverse universe,
                       std::uint64_t max_states = kDefaultMaxStates);

}  // namespace scalc
