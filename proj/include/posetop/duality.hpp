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

#ifndef POSETOP_DUALITY_HPP_
#define POSETOP_DUALITY_HPP_

#include <optional>

#include "posetop/index_set.hpp"
#include "posetop/poset_matrix.hpp"

namespace posetop {

// Flip-transpose E * A^T * E: entry (i, j) is A(n+1-j, n+1-i). The order
// is reversed, so the Hasse diagram turns upside down.
PosetMatrix dual(const PosetMatrix& a);

bool is_self_dual(const PosetMatrix& a);

// {n+1-i : i in alpha}, sorted.
IndexSet dual_index_set(const IndexSet& alpha, int n);

struct SemiEquidualWitness {
  // Principal block on which A and B differ: A[alpha] is disconnected and
  // B[alpha] is its dual. Outside alpha x alpha the two matrices agree.
  IndexSet alpha;

  bool operator==(const SemiEquidualWitness&) const = default;
};

// Searches every alpha with |alpha| >= 2 by increasing size, then
// lexicographically, and returns the first that works. Symmetric in a and b.
// Throws OrderMismatch when the orders differ.
std::optional<SemiEquidualWitness> semi_equidual(const PosetMatrix& a,
                                                 const PosetMatrix& b);

}  // namespace posetop

#endif  // POSETOP_DUALITY_HPP_
