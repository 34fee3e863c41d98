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

#include "posetop/duality.hpp"

#include <vector>

#include "posetop/structure.hpp"

namespace posetop {

PosetMatrix dual(const PosetMatrix& a) {
  const int n = a.order();
  BitMatrix out(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      if (a.get(n + 1 - j, n + 1 - i)) out.set(i, j, true);
    }
  }
  return unchecked_poset(std::move(out));
}

bool is_self_dual(const PosetMatrix& a) { return dual(a) == a; }

IndexSet dual_index_set(const IndexSet& alpha, int n) {
  alpha.check_within(n);
  std::vector<int> out;
  out.reserve(alpha.size());
  for (auto it = alpha.indices().rbegin(); it != alpha.indices().rend(); ++it) {
    out.push_back(n + 1 - *it);
  }
  return IndexSet(std::move(out));
}

namespace {

// Subsets of [n] with exactly k elements, smallest index set first under
// lexicographic order of the sorted index lists.
bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int p = k - 1;
  while (p >= 0 && c[p] == n - k + p + 1) --p;
  if (p < 0) return false;
  ++c[p];
  for (int q = p + 1; q < k; ++q) c[q] = c[q - 1] + 1;
  return true;
}

bool agree_outside(const PosetMatrix& a, const PosetMatrix& b, Word mask) {
  for (int r = 1; r <= a.order(); ++r) {
    Word diff = a.row_word(r) ^ b.row_word(r);
    if (((mask >> (r - 1)) & 1U) != 0) diff &= ~mask;
    if (diff != 0) return false;
  }
  return true;
}

}  // namespace

std::optional<SemiEquidualWitness> semi_equidual(const PosetMatrix& a,
                                                 const PosetMatrix& b) {
  if (a.order() != b.order()) {
    throw OrderMismatch("semi-equidual test needs equal orders, got " +
                        std::to_string(a.order()) + " and " +
                        std::to_string(b.order()));
  }
  const int n = a.order();
  for (int size = 2; size <= n; ++size) {
    std::vector<int> c(size);
    for (int p = 0; p < size; ++p) c[p] = p + 1;
    do {
      const IndexSet alpha(c);
      if (!agree_outside(a, b, alpha.mask())) continue;
      const PosetMatrix block_a = principal_subposet(a, alpha);
      const PosetMatrix block_b = principal_subposet(b, alpha);
      if (dual(block_a) != block_b) continue;
      // Dual blocks share connectivity, so testing one side keeps symmetry.
      if (is_connected(block_a)) continue;
      return SemiEquidualWitness{alpha};
    } while (next_combination(c, n));
  }
  return std::nullopt;
}

}  // namespace posetop
