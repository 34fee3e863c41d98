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

#include "posetop/poset_matrix.hpp"

#include <algorithm>

namespace posetop {

std::string Violation::to_string() const {
  switch (kind) {
    case ViolationKind::NotReflexive:
      return "not reflexive: a" + std::to_string(i) + std::to_string(i) +
             " = 0 at (" + std::to_string(i) + "," + std::to_string(i) + ")";
    case ViolationKind::NotLowerTriangular:
      return "not lower triangular: entry (" + std::to_string(i) + "," +
             std::to_string(j) + ") above the diagonal is 1";
    case ViolationKind::TransitivityViolation:
      return "transitivity violated at (i,j,k) = (" + std::to_string(i) +
             "," + std::to_string(j) + "," + std::to_string(k) +
             "): a_ij = 1, a_jk = 1, a_ik = 0";
  }
  return "unknown violation";
}

std::optional<Violation> find_violation(const BitMatrix& m) {
  if (!m.is_square()) {
    throw DimensionMismatch("poset matrix must be square, got " +
                            std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
  }
  const int n = m.rows();
  const auto words = m.words();
  for (int i = 1; i <= n; ++i) {
    const Word row = words[static_cast<std::size_t>(i - 1)];
    Word reachable = 0;
    for (Word rest = row; rest != 0; rest &= rest - 1) {
      reachable |= words[static_cast<std::size_t>(__builtin_ctzll(rest))];
    }
    const Word missing = reachable & ~row;
    const Word upper = row & ~low_mask(i);
    const Word not_reflexive = ((row >> (i - 1)) & 1U) ? 0 : Word{1} << (i - 1);
    const Word bad = missing | upper | not_reflexive;
    if (bad == 0) continue;
    const int k = __builtin_ctzll(bad) + 1;
    if (k == i && not_reflexive != 0) {
      return Violation{ViolationKind::NotReflexive, i, i, 0};
    }
    if ((upper >> (k - 1)) & 1U) {
      return Violation{ViolationKind::NotLowerTriangular, i, k, 0};
    }
    for (Word rest = row; rest != 0; rest &= rest - 1) {
      const int j = __builtin_ctzll(rest) + 1;
      if ((words[static_cast<std::size_t>(j - 1)] >> (k - 1)) & 1U) {
        return Violation{ViolationKind::TransitivityViolation, i, j, k};
      }
    }
  }
  return std::nullopt;
}

PosetMatrix validate(const BitMatrix& m) {
  if (auto v = find_violation(m)) throw ValidationError(*v);
  return PosetMatrix(m);
}

PosetMatrix poset(std::string_view rows_text) {
  return validate(BitMatrix::from_text(rows_text));
}

PosetMatrix unchecked_poset(BitMatrix m) { return PosetMatrix(std::move(m)); }

PosetMatrix PosetMatrix::identity(int n) {
  return PosetMatrix(BitMatrix::identity(n));
}

PosetMatrix PosetMatrix::chain(int n) {
  BitMatrix m(n, n);
  for (int i = 1; i <= n; ++i) m.set_row_word(i, low_mask(i));
  return PosetMatrix(std::move(m));
}

namespace {

void check_position(const PosetMatrix& a, int i) {
  if (i < 1 || i > a.order()) {
    throw IndexOutOfRange("insertion position " + std::to_string(i) +
                          " outside [1, " + std::to_string(a.order()) + "]");
  }
}

}  // namespace

BlockView block_decompose(const PosetMatrix& a, int i) {
  check_position(a, i);
  const int n = a.order();
  BlockView b;
  b.i = i;
  BitMatrix a11(i - 1, i - 1);
  for (int r = 1; r < i; ++r) a11.set_row_word(r, a.row_word(r));
  b.a11 = unchecked_poset(std::move(a11));
  b.a_row = BitVector(i - 1, a.row_word(i));
  Word col = 0;
  BitMatrix a21(n - i, i - 1);
  BitMatrix a22(n - i, n - i);
  for (int r = i + 1; r <= n; ++r) {
    const Word w = a.row_word(r);
    col |= ((w >> (i - 1)) & 1U) << (r - i - 1);
    a21.set_row_word(r - i, w);
    a22.set_row_word(r - i, w >> i);
  }
  b.a_col = BitVector(n - i, col);
  b.a21 = std::move(a21);
  b.a22 = unchecked_poset(std::move(a22));
  return b;
}

PosetMatrix reassemble(const BlockView& b) {
  const int before = b.a11.order();
  const int after = b.a22.order();
  if (b.i != before + 1 || b.a_row.size() != before ||
      b.a_col.size() != after || b.a21.rows() != after ||
      b.a21.cols() != before) {
    throw DimensionMismatch("inconsistent block shapes");
  }
  const int n = before + after + 1;
  BitMatrix m(n, n);
  for (int r = 1; r <= before; ++r) m.set_row_word(r, b.a11.row_word(r));
  m.set_row_word(b.i, b.a_row.bits() | (Word{1} << before));
  for (int r = 1; r <= after; ++r) {
    const Word w = b.a21.row_word(r) |
                   (Word{b.a_col.get(r)} << before) |
                   (b.a22.row_word(r) << (before + 1));
    m.set_row_word(b.i + r, w);
  }
  return validate(m);
}

BitMatrix submatrix(const BitMatrix& a, const IndexSet& rows,
                    const IndexSet& cols) {
  rows.check_within(a.rows());
  cols.check_within(a.cols());
  BitMatrix out(rows.size(), cols.size());
  int p = 1;
  for (int r : rows) {
    const Word w = a.row_word(r);
    Word packed = 0;
    int q = 0;
    for (int c : cols) {
      packed |= ((w >> (c - 1)) & 1U) << q;
      ++q;
    }
    out.set_row_word(p++, packed);
  }
  return out;
}

PosetMatrix principal_subposet(const PosetMatrix& a, const IndexSet& alpha) {
  if (alpha.empty()) {
    throw IndexOutOfRange("principal subposet needs a nonempty index set");
  }
  return validate(submatrix(a.matrix(), alpha, alpha));
}

IndexSet minimal_elements(const PosetMatrix& a) {
  std::vector<int> out;
  for (int i = 1; i <= a.order(); ++i) {
    if ((a.row_word(i) & low_mask(i - 1)) == 0) out.push_back(i);
  }
  return IndexSet(std::move(out));
}

IndexSet maximal_elements(const PosetMatrix& a) {
  Word below_something = 0;
  for (int r = 1; r <= a.order(); ++r) {
    below_something |= a.row_word(r) & low_mask(r - 1);
  }
  std::vector<int> out;
  for (int i = 1; i <= a.order(); ++i) {
    if (((below_something >> (i - 1)) & 1U) == 0) out.push_back(i);
  }
  return IndexSet(std::move(out));
}

std::vector<std::pair<int, int>> cover_relation(const PosetMatrix& a) {
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j <= a.order(); ++j) {
    const Word strictly_below = a.row_word(j) & low_mask(j - 1);
    Word implied = 0;
    for (Word rest = strictly_below; rest != 0; rest &= rest - 1) {
      const int k = __builtin_ctzll(rest) + 1;
      implied |= a.row_word(k) & low_mask(k - 1);
    }
    for (Word covers = strictly_below & ~implied; covers != 0;
         covers &= covers - 1) {
      out.emplace_back(__builtin_ctzll(covers) + 1, j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace posetop
