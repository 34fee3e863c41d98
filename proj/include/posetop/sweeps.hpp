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

#ifndef POSETOP_SWEEPS_HPP_
#define POSETOP_SWEEPS_HPP_

#include <optional>

#include "posetop/poset_matrix.hpp"

namespace posetop {

// Which kind of block A[alpha] and operand B are required to be.
enum class BlockFamily { TotallyConnected, TotallyDisconnected };

// Position of alpha: {1..k} with 1 < k < n, {k..n} with k >= 2, or
// {d..k} with 1 < d < k < n.
enum class BlockRule { Leading, Trailing, Interior };

// Hypothesis used for the interior rule. Literal: D = A[{k..n}|{1..k-1}]
// has equal rows that are all ones or all zeros. Repaired: the block's
// outgoing column strip A[{k+1..n}|{d..k}] has equal columns and its
// incoming row strip A[{d..k}|{1..d-1}] has equal rows.
enum class InteriorReading { Literal, Repaired };

struct SweepCase {
  PosetMatrix a;
  int m = 0;      // order of B (a chain or an antichain)
  int first = 0;  // alpha = {first..last}
  int last = 0;
};

struct SweepReport {
  long hypothesis_hits = 0;
  long violations = 0;
  std::optional<SweepCase> first_violation;
};

// Whether the hypothesis of the identical-output statement holds for
// alpha = {first..last} (block shape, D condition, and for the connected
// family a connected A).
bool invariance_hypothesis(const PosetMatrix& a, BlockFamily family,
                           BlockRule rule, int first, int last,
                           InteriorReading reading = InteriorReading::Literal);

// Over every A of order 2..max_n, every alpha admitted by rule and every
// B of order 1..max_m from the family (chain or antichain): counts the
// cases meeting the hypothesis and those where A sq_i B is not constant
// over alpha.
SweepReport sweep_invariance(BlockFamily family, BlockRule rule, int max_n,
                             int max_m,
                             InteriorReading reading = InteriorReading::Literal);

// Same hypotheses with a totally disconnected A[alpha] and a chain B.
// The claimed conclusion is that the composites at the two ends of alpha
// (1 and k, k and n, d and k) are semi-equidual. The trailing rule needs
// k < n, since k = n collapses alpha to one point.
SweepReport sweep_semi_equidual(int max_n, BlockRule rule, int max_m,
                                InteriorReading reading =
                                    InteriorReading::Literal);

}  // namespace posetop

#endif  // POSETOP_SWEEPS_HPP_
