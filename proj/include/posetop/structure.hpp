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

#ifndef POSETOP_STRUCTURE_HPP_
#define POSETOP_STRUCTURE_HPP_

#include <optional>
#include <vector>

#include "posetop/compose.hpp"
#include "posetop/index_set.hpp"
#include "posetop/poset_matrix.hpp"

namespace posetop {

// Components of the comparability graph (i ~ j iff a_ij = 1 or a_ji = 1),
// ordered by their smallest element.
std::vector<IndexSet> connected_components(const PosetMatrix& a);

bool is_connected(const PosetMatrix& a);

struct ConnectivityClass {
  bool connected = true;
  // For a disconnected matrix: the component containing n. Every entry
  // between witness and its complement is zero. Empty when connected.
  IndexSet witness;
};

ConnectivityClass classify_connectivity(const PosetMatrix& a);

// Every entry on or below the diagonal is 1 (a chain).
bool is_totally_connected(const PosetMatrix& a);
// The identity (an antichain).
bool is_totally_disconnected(const PosetMatrix& a);

// Vacuously true with at most one column (row).
bool equal_columns(const BitMatrix& d);
bool equal_rows(const BitMatrix& d);

// Whether A sq_i B is the same matrix for every i in alpha. Requires a
// contiguous alpha with A[alpha] and B both totally connected or both
// totally disconnected; throws PreconditionViolated otherwise.
bool insertion_invariance_class(const PosetMatrix& a, const IndexSet& alpha,
                                const PosetMatrix& b);

// Maximal contiguous alpha with |alpha| >= 2 accepted by
// insertion_invariance_class and answered true, in increasing order.
std::vector<IndexSet> scan_invariance_blocks(const PosetMatrix& a,
                                             const PosetMatrix& b);

struct DpmSides {
  // A sq_i B is disconnected for every i.
  bool all_composites_disconnected = false;
  bool a_disconnected = false;

  bool agree() const noexcept {
    return all_composites_disconnected == a_disconnected;
  }
};

DpmSides dpm_sides(const PosetMatrix& a, const PosetMatrix& b);
inline bool dpm_check(const PosetMatrix& a, const PosetMatrix& b) {
  return dpm_sides(a, b).agree();
}

struct Decomposition {
  IndexSet g_indices;  // component containing 1
  IndexSet h_indices;
  PosetMatrix g;
  PosetMatrix h;
};

// Splits a disconnected matrix into the component of 1 and the rest;
// nullopt when connected.
std::optional<Decomposition> decompose_disconnected(const PosetMatrix& c);

struct Factorization {
  PosetMatrix a;
  int i = 0;
  PosetMatrix b;
  CompositionKind kind = CompositionKind::square();

  bool operator==(const Factorization&) const = default;
};

// Every (A, i, B) with orders at least 2 and compose(kind, A, i, B) == C,
// ordered by the order of B, then i, then A. Matrices of order below 3
// have no such split and yield an empty list.
std::vector<Factorization> factor(const PosetMatrix& c,
                                  const CompositionKind& kind);

}  // namespace posetop

#endif  // POSETOP_STRUCTURE_HPP_
