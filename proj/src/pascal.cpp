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

#include "posetop/pascal.hpp"

#include "posetop/compose.hpp"

namespace posetop {

PosetMatrix pascal_matrix(int n) {
  if (n < 1) {
    throw IndexOutOfRange("Pascal matrix order must be at least 1, got " +
                          std::to_string(n));
  }
  BitMatrix out(n, n);
  for (int i = 1; i <= n; ++i) {
    Word row = 0;
    for (int j = 1; j <= i; ++j) {
      if (((j - 1) & ~(i - 1)) == 0) row |= Word{1} << (j - 1);
    }
    out.set_row_word(i, row);
  }
  return validate(out);
}

bool pascal_decomposition_check(int n) {
  if (n < 2) {
    throw IndexOutOfRange("decomposition needs order at least 2, got " +
                          std::to_string(n));
  }
  const PosetMatrix p = pascal_matrix(n);
  const PosetMatrix tail = principal_subposet(p, IndexSet::range(2, n));
  return square_compose(pascal_matrix(2), 2, tail) == p;
}

}  // namespace posetop
