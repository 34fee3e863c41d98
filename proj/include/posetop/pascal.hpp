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

#ifndef POSETOP_PASCAL_HPP_
#define POSETOP_PASCAL_HPP_

#include "posetop/poset_matrix.hpp"

namespace posetop {

// b_ij = C(i-1, j-1) mod 2, which by Lucas is 1 iff the bits of j-1 are a
// subset of the bits of i-1.
PosetMatrix pascal_matrix(int n);

// Deletes the first row and column of P_n, grafts the rest back into
// P_2 at position 2 and compares with P_n.
bool pascal_decomposition_check(int n);

}  // namespace posetop

#endif  // POSETOP_PASCAL_HPP_
