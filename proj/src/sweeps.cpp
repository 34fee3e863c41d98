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

#include "posetop/sweeps.hpp"

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "posetop/compose.hpp"
#include "posetop/duality.hpp"
#include "posetop/enumerate.hpp"
#include "posetop/structure.hpp"

namespace posetop {

namespace {

bool constant_vector(const BitMatrix& d) {
  return d.is_zero() || d.is_ones();
}

BitMatrix strip(const PosetMatrix& a, int r0, int r1, int c0, int c1) {
  if (r0 > r1 || c0 > c1) return BitMatrix(std::max(0, r1 - r0 + 1),
                                           std::max(0, c1 - c0 + 1));
  return submatrix(a, IndexSet::range(r0, r1), IndexSet::range(c0, c1));
}

bool block_has_shape(const PosetMatrix& a, BlockFamily family, int first,
                     int last) {
  const PosetMatrix block =
      principal_subposet(a, IndexSet::range(first, last));
  return family == BlockFamily::TotallyConnected
             ? is_totally_connected(block)
             : is_totally_disconnected(block);
}

// The D condition for alpha = {first..last}, without the block shape.
bool d_condition(const PosetMatrix& a, BlockRule rule, int first, int last,
                 InteriorReading reading) {
  const int n = a.order();
  switch (rule) {
    case BlockRule::Leading:
      return equal_columns(strip(a, last + 1, n, 1, last));
    case BlockRule::Trailing:
      return equal_rows(strip(a, first, n, 1, first - 1));
    case BlockRule::Interior:
      if (reading == InteriorReading::Literal) {
        const BitMatrix d = strip(a, last, n, 1, last - 1);
        return equal_rows(d) && constant_vector(strip(a, last, last, 1,
                                                      last - 1));
      }
      return equal_columns(strip(a, last + 1, n, first, last)) &&
             equal_rows(strip(a, first, last, 1, first - 1));
  }
  return false;
}

bool rule_admits(BlockRule rule, int n, int first, int last) {
  switch (rule) {
    case BlockRule::Leading:
      return first == 1 && 1 < last && last < n;
    case BlockRule::Trailing:
      return last == n && first >= 2;
    case BlockRule::Interior:
      return 1 < first && first < last && last < n;
  }
  return false;
}

// Calls visit(first, last) for every alpha admitted by rule at order n.
void for_each_alpha(BlockRule rule, int n,
                    const std::function<void(int, int)>& visit) {
  for (int first = 1; first <= n; ++first) {
    for (int last = first; last <= n; ++last) {
      if (rule_admits(rule, n, first, last)) visit(first, last);
    }
  }
}

PosetMatrix family_member(BlockFamily family, int m) {
  return family == BlockFamily::TotallyConnected ? PosetMatrix::chain(m)
                                                 : PosetMatrix::identity(m);
}

}  // namespace

bool invariance_hypothesis(const PosetMatrix& a, BlockFamily family,
                           BlockRule rule, int first, int last,
                           InteriorReading reading) {
  if (!rule_admits(rule, a.order(), first, last)) return false;
  if (family == BlockFamily::TotallyConnected && !is_connected(a)) {
    return false;
  }
  return block_has_shape(a, family, first, last) &&
         d_condition(a, rule, first, last, reading);
}

SweepReport sweep_invariance(BlockFamily family, BlockRule rule, int max_n,
                             int max_m, InteriorReading reading) {
  SweepReport report;
  for (int n = 2; n <= max_n; ++n) {
    for (const auto& a : generate_all(n)) {
      for_each_alpha(rule, n, [&](int first, int last) {
        if (!invariance_hypothesis(a, family, rule, first, last, reading)) {
          return;
        }
        for (int m = 1; m <= max_m; ++m) {
          const PosetMatrix b = family_member(family, m);
          ++report.hypothesis_hits;
          const PosetMatrix reference = square_compose(a, first, b);
          bool same = true;
          for (int i = first + 1; i <= last && same; ++i) {
            same = square_compose(a, i, b) == reference;
          }
          if (!same) {
            ++report.violations;
            if (!report.first_violation) {
              report.first_violation = SweepCase{a, m, first, last};
            }
          }
        }
      });
    }
  }
  return report;
}

SweepReport sweep_semi_equidual(int max_n, BlockRule rule, int max_m,
                                InteriorReading reading) {
  SweepReport report;
  for (int n = 2; n <= max_n; ++n) {
    for (const auto& a : generate_all(n)) {
      for_each_alpha(rule, n, [&](int first, int last) {
        if (rule == BlockRule::Trailing && first == last) return;
        if (!block_has_shape(a, BlockFamily::TotallyDisconnected, first,
                             last) ||
            !d_condition(a, rule, first, last, reading)) {
          return;
        }
        for (int m = 1; m <= max_m; ++m) {
          const PosetMatrix b = PosetMatrix::chain(m);
          ++report.hypothesis_hits;
          if (!semi_equidual(square_compose(a, first, b),
                             square_compose(a, last, b))) {
            ++report.violations;
            if (!report.first_violation) {
              report.first_violation = SweepCase{a, m, first, last};
            }
          }
        }
      });
    }
  }
  return report;
}

}  // namespace posetop
