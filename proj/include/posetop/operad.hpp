// Copyright 2026 The posetop Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POSETOP_OPERAD_HPP_
#define POSETOP_OPERAD_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "posetop/compose.hpp"
#include "posetop/poset_matrix.hpp"

namespace posetop {

enum class Law { NestedAssoc, ParallelAssoc, Unit };

std::string law_name(Law law);

// Both sides of one law instance. For partial (boxed) kinds a side may be
// undefined, in which case the instance is skipped rather than judged.
struct LawCheck {
  bool defined = true;
  bool equal = true;
  std::optional<PosetMatrix> left;
  std::optional<PosetMatrix> right;
};

// (A o_i B) o_{i+j-1} C against A o_i (B o_j C).
LawCheck check_nested(const CompositionKind& kind, const PosetMatrix& a,
                      const PosetMatrix& b, const PosetMatrix& c, int i,
                      int j);

// (A o_i B) o_{j+m-1} C against (A o_j C) o_i B for i < j. Throws
// RequiresDistinctIndices unless i < j.
LawCheck check_parallel(const CompositionKind& kind, const PosetMatrix& a,
                        const PosetMatrix& b, const PosetMatrix& c, int i,
                        int j);

// left = [1] o_1 A and right = A o_i [1]; equal means both are A.
LawCheck check_unit(const CompositionKind& kind, const PosetMatrix& a, int i);

struct LawWitness {
  PosetMatrix a;
  std::optional<PosetMatrix> b;  // absent for the unit law
  std::optional<PosetMatrix> c;  // absent for the unit law
  int i = 0;
  int j = 0;                     // 0 for the unit law
  PosetMatrix left;
  PosetMatrix right;
};

struct LawReport {
  Law law = Law::NestedAssoc;
  CompositionKind kind = CompositionKind::square();
  bool passed = true;
  long cases_checked = 0;
  long cases_skipped = 0;
  long failures = 0;
  // Least failing case: smallest n+m+k, then row strings of A, B, C,
  // then i, then j.
  std::optional<LawWitness> witness;
};

struct LawSearch {
  enum class Mode { Exhaustive, Random };

  Mode mode = Mode::Exhaustive;
  std::uint64_t seed = 0;
  long trials = 0;
  // Called for every failing case in search order, when set.
  std::function<void(Law, const LawWitness&)> on_failure;

  static LawSearch exhaustive() { return {}; }
  static LawSearch random(std::uint64_t seed, long trials) {
    return {Mode::Random, seed, trials, nullptr};
  }
};

// One report per law, in the order nested, parallel, unit. Exhaustive mode
// ranges over every triple from PM(1..max_order) and every valid index
// pair. Random mode draws, per trial and per operand, an order uniformly
// from 1..max_order and then a matrix uniformly from PM(order) (orders at
// least 2 for the outer operand of the parallel law), followed by uniform
// indices. The result is a function of (kind, max_order, search).
std::vector<LawReport> verify_laws(const CompositionKind& kind, int max_order,
                                   const LawSearch& search);

}  // namespace posetop

#endif  // POSETOP_OPERAD_HPP_
