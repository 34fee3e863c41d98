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

#include "posetop/structure.hpp"

#include <algorithm>
#include <bit>

namespace posetop {

std::vector<IndexSet> connected_components(const PosetMatrix& a) {
  const int n = a.order();
  // Symmetric adjacency: row r of A plus column r of A.
  std::vector<Word> adj(n + 1, 0);
  for (int r = 1; r <= n; ++r) {
    const Word below = a.row_word(r) & low_mask(r - 1);
    adj[r] |= below;
    for (Word w = below; w != 0; w &= w - 1) {
      const int c = std::countr_zero(w) + 1;
      adj[c] |= Word{1} << (r - 1);
    }
  }
  std::vector<IndexSet> out;
  Word unseen = low_mask(n);
  while (unseen != 0) {
    Word component = unseen & (~unseen + 1);
    Word frontier = component;
    while (frontier != 0) {
      Word next = 0;
      for (Word w = frontier; w != 0; w &= w - 1) {
        next |= adj[std::countr_zero(w) + 1];
      }
      frontier = next & ~component;
      component |= next;
    }
    out.push_back(IndexSet::from_mask(component));
    unseen &= ~component;
  }
  return out;
}

bool is_connected(const PosetMatrix& a) {
  return connected_components(a).size() <= 1;
}

ConnectivityClass classify_connectivity(const PosetMatrix& a) {
  const auto components = connected_components(a);
  if (components.size() <= 1) return {};
  const auto it = std::find_if(
      components.begin(), components.end(),
      [&](const IndexSet& part) { return part.contains(a.order()); });
  return ConnectivityClass{false, *it};
}

bool is_totally_connected(const PosetMatrix& a) {
  for (int r = 1; r <= a.order(); ++r) {
    if (a.row_word(r) != low_mask(r)) return false;
  }
  return true;
}

bool is_totally_disconnected(const PosetMatrix& a) {
  for (int r = 1; r <= a.order(); ++r) {
    if (a.row_word(r) != (Word{1} << (r - 1))) return false;
  }
  return true;
}

bool equal_columns(const BitMatrix& d) {
  const Word full = low_mask(d.cols());
  for (int r = 1; r <= d.rows(); ++r) {
    const Word w = d.row_word(r);
    if (w != 0 && w != full) return false;
  }
  return true;
}

bool equal_rows(const BitMatrix& d) {
  for (int r = 2; r <= d.rows(); ++r) {
    if (d.row_word(r) != d.row_word(1)) return false;
  }
  return true;
}

namespace {

enum class BlockShape { None, Connected, Disconnected };

BlockShape matching_shape(const PosetMatrix& block, const PosetMatrix& b) {
  if (is_totally_connected(block) && is_totally_connected(b)) {
    return BlockShape::Connected;
  }
  if (is_totally_disconnected(block) && is_totally_disconnected(b)) {
    return BlockShape::Disconnected;
  }
  return BlockShape::None;
}

bool outputs_coincide(const PosetMatrix& a, const IndexSet& alpha,
                      const PosetMatrix& b) {
  const PosetMatrix first = square_compose(a, alpha.front(), b);
  for (int i : alpha) {
    if (i != alpha.front() && square_compose(a, i, b) != first) return false;
  }
  return true;
}

}  // namespace

bool insertion_invariance_class(const PosetMatrix& a, const IndexSet& alpha,
                                const PosetMatrix& b) {
  alpha.check_within(a.order());
  if (alpha.empty() || !alpha.is_contiguous()) {
    throw PreconditionViolated("alpha " + alpha.to_string(),
                               "a nonempty contiguous range");
  }
  if (matching_shape(principal_subposet(a, alpha), b) == BlockShape::None) {
    throw PreconditionViolated(
        "A[alpha] and B",
        "both totally connected or both totally disconnected");
  }
  return outputs_coincide(a, alpha, b);
}

std::vector<IndexSet> scan_invariance_blocks(const PosetMatrix& a,
                                             const PosetMatrix& b) {
  const int n = a.order();
  std::vector<IndexSet> qualifying;
  for (int first = 1; first <= n; ++first) {
    for (int last = first + 1; last <= n; ++last) {
      const IndexSet alpha = IndexSet::range(first, last);
      if (matching_shape(principal_subposet(a, alpha), b) !=
              BlockShape::None &&
          outputs_coincide(a, alpha, b)) {
        qualifying.push_back(alpha);
      }
    }
  }
  std::vector<IndexSet> maximal;
  for (const auto& alpha : qualifying) {
    const bool contained =
        std::any_of(qualifying.begin(), qualifying.end(),
                    [&](const IndexSet& other) {
                      return other != alpha && other.front() <= alpha.front() &&
                             alpha.back() <= other.back();
                    });
    if (!contained) maximal.push_back(alpha);
  }
  return maximal;
}

DpmSides dpm_sides(const PosetMatrix& a, const PosetMatrix& b) {
  DpmSides sides;
  sides.a_disconnected = !is_connected(a);
  sides.all_composites_disconnected = true;
  for (int i = 1; i <= a.order(); ++i) {
    if (is_connected(square_compose(a, i, b))) {
      sides.all_composites_disconnected = false;
      break;
    }
  }
  return sides;
}

std::optional<Decomposition> decompose_disconnected(const PosetMatrix& c) {
  const auto components = connected_components(c);
  if (components.size() <= 1) return std::nullopt;
  const IndexSet g = components.front();
  const IndexSet h = IndexSet::from_mask(low_mask(c.order()) & ~g.mask());
  return Decomposition{g, h, principal_subposet(c, g), principal_subposet(c, h)};
}

namespace {

constexpr int kMaxFreeBits = 20;

// A of order n from C with block {i, ..., i+m-1} collapsed to position i,
// using the given row prefix and column suffix at position i.
BitMatrix collapse(const PosetMatrix& c, int i, int m, Word a_row,
                   Word a_col) {
  const int n = c.order() - m + 1;
  BitMatrix a(n, n);
  for (int r = 1; r < i; ++r) a.set_row_word(r, c.row_word(r));
  a.set_row_word(i, a_row | (Word{1} << (i - 1)));
  for (int r = i + 1; r <= n; ++r) {
    const Word w = c.row_word(r + m - 1);
    const Word col_bit = (a_col >> (r - i - 1)) & 1U;
    a.set_row_word(r, (w & low_mask(i - 1)) | (col_bit << (i - 1)) |
                          ((w >> (i + m - 1)) << i));
  }
  return a;
}

}  // namespace

std::vector<Factorization> factor(const PosetMatrix& c,
                                  const CompositionKind& kind) {
  const int total = c.order();
  std::vector<Factorization> found;
  for (int m = 2; m <= total - 1; ++m) {
    const int n = total - m + 1;
    for (int i = 1; i <= n; ++i) {
      const PosetMatrix b =
          principal_subposet(c, IndexSet::range(i, i + m - 1));
      std::vector<std::pair<Word, Word>> candidates;
      if (kind.is_boxed()) {
        if (n - 1 > kMaxFreeBits) {
          throw ResourceLimit("boxed factorization of order " +
                              std::to_string(total) + " is too large");
        }
        for (Word r = 0; r <= low_mask(i - 1); ++r) {
          for (Word col = 0; col <= low_mask(n - i); ++col) {
            candidates.emplace_back(r, col);
          }
        }
      } else {
        // The last element of B is always maximal and the first always
        // minimal, so their row and column carry A's own row and column.
        const Word row = c.row_word(i + m - 1) & low_mask(i - 1);
        Word col = 0;
        for (int r = i + m; r <= total; ++r) {
          col |= ((c.row_word(r) >> (i - 1)) & 1U) << (r - i - m);
        }
        candidates.emplace_back(row, col);
      }
      for (const auto& [row, col] : candidates) {
        const BitMatrix raw = collapse(c, i, m, row, col);
        if (find_violation(raw)) continue;
        const PosetMatrix a = unchecked_poset(raw);
        const auto recomposed = try_compose(kind, a, i, b);
        if (recomposed && *recomposed == c) {
          found.push_back(Factorization{a, i, b, kind});
        }
      }
    }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const Factorization& x, const Factorization& y) {
                     if (x.b.order() != y.b.order()) {
                       return x.b.order() < y.b.order();
                     }
                     if (x.i != y.i) return x.i < y.i;
                     return lex_less(x.a, y.a);
                   });
  return found;
}

}  // namespace posetop
