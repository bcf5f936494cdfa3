#include "scalc/state_space.hpp"

#include <algorithm>
#include <limits>

#include "scalc/error.hpp"

namespace scalc {

Domain::Domain(std::string name, std::vector<Value> values)
    : name_(std::move(name)), values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(ErrorKind::EmptyDomain, "domain '" + name_ + "' has no values");
  }
  for (std::size_t k = 1; k < values_.size(); ++k) {
    if (values_[k - 1] >= values_[k]) {
      throw Error(ErrorKind::InvalidDomain,
                  "domain '" + name_ + "' must be strictly increasing");
    }
  }
  contiguous_ = static_cast<std::uint64_t>(values_.back()) - static_cast<std::uint64_t>(values_.front()) ==
                values_.size() - 1;
}

Domain Domain::range(std::string name, Value lo, Value hi) {
  if (lo > hi) {
    throw Error(ErrorKind::EmptyDomain, "range " + std::to_string(lo) + ".." +
                                            std::to_string(hi) + " is empty");
  }
  // Guard against ranges that cannot be materialized.
  const auto width = static_cast<unsigned __int128>(
      static_cast<__int128>(hi) - static_cast<__int128>(lo) + 1);
  if (width > (std::uint64_t{1} << 32)) {
    throw Error(ErrorKind::SpaceTooLarge,
                "range " + std::to_string(lo) + ".." + std::to_string(hi) +
                    " has too many values");
  }
  std::vector<Value> values;
  values.reserve(static_cast<std::size_t>(width));
  for (Value v = lo;; ++v) {
    values.push_back(v);
    if (v == hi) break;
  }
  return Domain(std::move(name), std::move(values));
}

std::optional<std::size_t> Domain::position(Value v) const noexcept {
  if (v < values_.front() || v > values_.back()) return std::nullopt;
  if (contiguous_) return static_cast<std::size_t>(v - values_.front());
  auto it = std::lower_bound(values_.begin(), values_.end(), v);
  if (it == values_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - values_.begin());
}

VarUniverse::VarUniverse(std::vector<Variable> vars) {
  for (auto& v : vars) add(std::move(v.name), std::move(v.domain));
}

void VarUniverse::add(std::string name, Domain domain) {
  if (by_name_.contains(name)) {
    throw Error(ErrorKind::InvalidDomain,
                "variable '" + name + "' declared twice in universe");
  }
  by_name_.emplace(name, vars_.size());
  vars_.push_back(Variable{std::move(name), std::move(domain)});
}

std::optional<std::size_t> VarUniverse::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::size_t VarUniverse::index_of(std::string_view name) const {
  if (auto k = find(name)) return *k;
  throw Error(ErrorKind::UnknownVariable,
              "unknown variable '" + std::string(name) + "'");
}

StateSpace::StateSpace(VarUniverse universe, std::uint64_t max_states)
    : universe_(std::move(universe)) {
  const std::uint64_t limit =
      std::min<std::uint64_t>(max_states, std::numeric_limits<StateIndex>::max());
  std::uint64_t total = 1;
  for (const auto& v : universe_.vars()) {
    if (v.domain.size() == 0) {
      throw Error(ErrorKind::EmptyDomain, "variable '" + v.name + "' has no values");
    }
    if (total > limit / v.domain.size()) {
      throw Error(ErrorKind::SpaceTooLarge,
                  "state space exceeds the limit of " + std::to_string(limit) +
                      " states");
    }
    total *= v.domain.size();
  }
  size_ = static_cast<std::size_t>(total);
  strides_.assign(universe_.size(), 1);
  for (std::size_t k = universe_.size(); k-- > 1;) {
    strides_[k - 1] = strides_[k] * universe_[k].domain.size();
  }
}

StateSpace StateSpace::abstract(std::size_t n) {
  VarUniverse u;
  if (n == 0) {
    throw Error(ErrorKind::EmptyDomain, "abstract space needs at least one state");
  }
  u.add("s", Domain::range("state", 0, static_cast<Value>(n) - 1));
  return StateSpace(std::move(u));
}

State StateSpace::index_to_state(std::size_t k) const {
  if (k >= size_) {
    throw Error(ErrorKind::IndexOutOfRange,
                "state index " + std::to_string(k) + " outside [0, " +
                    std::to_string(size_) + ")");
  }
  State s;
  s.values.reserve(universe_.size());
  for (std::size_t v = 0; v < universe_.size(); ++v) s.values.push_back(value_at(k, v));
  return s;
}

std::size_t StateSpace::state_to_index(const State& s) const {
  if (s.values.size() != universe_.size()) {
    throw Error(ErrorKind::ValueNotInDomain,
                "state has " + std::to_string(s.values.size()) +
                    " values, universe has " + std::to_string(universe_.size()));
  }
  std::size_t k = 0;
  for (std::size_t v = 0; v < universe_.size(); ++v) {
    auto pos = universe_[v].domain.position(s.values[v]);
    if (!pos) {
      throw Error(ErrorKind::ValueNotInDomain,
                  std::to_string(s.values[v]) + " is not in the domain of '" +
                      universe_[v].name + "'");
    }
    k += *pos * strides_[v];
  }
  return k;
}

std::string StateSpace::format_state(std::size_t k) const {
  std::string out = "{";
  for (std::size_t v = 0; v < universe_.size(); ++v) {
    if (v) out += ", ";
    out += universe_[v].name + "=" + std::to_string(value_at(k, v));
  }
  return out + "}";
}

StateSpace build_space(VarUniverse universe, std::uint64_t max_states) {
  return StateSpace(std::move(universe), max_states);
}

}  // namespace scalc
