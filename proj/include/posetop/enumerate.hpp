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

#ifndef POSETOP_ENUMERATE_HPP_
#define POSETOP_ENUMERATE_HPP_

#include <span>
#include <vector>

#include "posetop/poset_matrix.hpp"

namespace posetop {

inline constexpr int kDefaultOrderCap = 8;

// All poset matrices of order n in lexicographic order of their row-major
// bit strings. Throws ResourceLimit when n exceeds cap.
std::vector<PosetMatrix> generate_all(int n, int cap = kDefaultOrderCap);

// Q^T A Q for the permutation sending new label r to old label
// perm[r-1]. Throws ValidationError unless perm is a linear extension.
PosetMatrix relabel(const PosetMatrix& a, std::span<const int> perm);

// Lexicographically least relabeling of A by a linear extension: the
// canonical member of its permutation-equivalence class.
PosetMatrix canonical_form(const PosetMatrix& a, int cap = kDefaultOrderCap);

struct IsoClass {
  PosetMatrix canonical;
  long labeled_count = 0;
  bool connected = true;
};

enum class ClassFilter { All, Connected, Disconnected };

// One entry per class, sorted by canonical representative.
std::vector<IsoClass> classes(int n, ClassFilter filter = ClassFilter::All,
                              int cap = kDefaultOrderCap);

}  // namespace posetop

#endif  // POSETOP_ENUMERATE_HPP_
