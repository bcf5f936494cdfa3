#pragma once

#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "scalc/error.hpp"
#include "scalc/pred_set.hpp"
#include "scalc/relation.hpp"
#include "scalc/state_space.hpp"

namespace scalc::test {

inline void expect_error(ErrorKind kind, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(kind) << ", nothing was thrown";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

inline VarUniverse universe(std::vector<std::pair<std::string, std::vector<Value>>> vars) {
  VarUniverse u;
  for (auto& [name, values] : vars) u.add(name, Domain(name, values));
  return u;
}

// Test-side generators use std::minstd_rand so they share nothing with the
// library's own PRNG.
inline PredSet any_predset(std::size_t n, std::minstd_rand& g) {
  PredSet p(n);
  for (std::size_t k = 0; k < n; ++k) p.set(k, g() % 2 == 1);
  return p;
}

inline Relation any_relation(std::size_t n, std::minstd_rand& g, unsigned density_percent = 50) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (g() % 100 < density_percent) pairs.emplace_back(x, y);
    }
  }
  return Relation::from_pairs(n, pairs);
}

using PairSet = std::set<std::pair<std::size_t, std::size_t>>;

inline PairSet pair_set(const Relation& r) {
  auto p = r.pairs();
  return PairSet(p.begin(), p.end());
}

}  // namespace scalc::test
