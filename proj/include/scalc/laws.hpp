#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "scalc/pred_set.hpp"
#include "scalc/relation.hpp"
#include "scalc/sformula.hpp"
#include "scalc/state_space.hpp"

namespace scalc {

/// Each state is included iff bit (k mod 64) of the (k div 64)-th output of
/// std::mt19937_64 seeded with `seed` is set.
PredSet random_predset(std::size_t size, std::uint64_t seed);
inline PredSet random_predset(const StateSpace& space, std::uint64_t seed) {
  return random_predset(space.size(), seed);
}

/// Same bit stream as random_predset, indexed by x * size + y.
Relation random_relation(std::size_t size, std::uint64_t seed);
inline Relation random_relation(const StateSpace& space, std::uint64_t seed) {
  return random_relation(space.size(), seed);
}

std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t fnv1a64(std::string_view text) noexcept;

enum class LawKind { Theorem, Diagnostic, NegativeControl };
std::string_view to_string(LawKind kind);

struct LawSymbol {
  std::string name;
  int arity = 1;
};

struct LawInfo {
  std::string id;
  LawKind kind = LawKind::Theorem;
  bool schema = false;
  std::string statement;
  std::vector<LawSymbol> symbols;
};

/// Registered laws in a fixed order: theorems first, then diagnostics
/// (readings expected to fail) and negative controls.
const std::vector<LawInfo>& list_laws();

struct LawInstance {
  std::string law;
  std::size_t space_size = 0;
  Env bindings;
  std::uint64_t seed = 0;
  std::string formula;  // instantiated formula, differs from the law's for random schema shapes
};

struct LawResult {
  std::string law;
  std::size_t trials = 0;
  std::size_t violation_count = 0;
  // The first few violating instances, sorted by (seed, space size).
  std::vector<LawInstance> violations;
};

struct LawOptions {
  std::vector<std::size_t> sizes{1, 2, 3, 4};
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  // Enumerate every binding and nothing else. UsageError when the binding
  // space of some size exceeds 2^20.
  bool exhaustive_only = false;
  std::size_t max_recorded = 16;
};

/// Runs one law: exhaustive enumeration wherever the binding space has at
/// most 2^16 members, boundary bindings (empty/full predicates; empty, full
/// and identity relations), and `trials` random bindings per size.
/// Throws UnknownLaw.
LawResult check_law(std::string_view id, const LawOptions& options = {});
LawResult check_law(std::string_view id, std::size_t trials, const std::vector<std::size_t>& sizes);

/// Restricted to the first-order schemas t1..t22 (case-insensitive).
LawResult check_t_schema(std::string_view id, const LawOptions& options = {});

}  // namespace scalc
