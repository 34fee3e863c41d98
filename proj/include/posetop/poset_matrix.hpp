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

#ifndef POSETOP_POSET_MATRIX_HPP_
#define POSETOP_POSET_MATRIX_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetop/bit_matrix.hpp"
#include "posetop/errors.hpp"
#include "posetop/index_set.hpp"

namespace posetop {

enum class ViolationKind { NotReflexive, NotLowerTriangular, TransitivityViolation };

// First failing cell or triple of a candidate poset matrix. For
// NotReflexive only i is meaningful; NotLowerTriangular uses (i, j);
// TransitivityViolation reports a_ij = 1, a_jk = 1, a_ik = 0.
struct Violation {
  ViolationKind kind;
  int i = 0;
  int j = 0;
  int k = 0;

  std::string to_string() const;
  bool operator==(const Violation&) const = default;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(Violation v)
      : Error("not a poset matrix: " + v.to_string()), violation_(v) {}
  const Violation& violation() const noexcept { return violation_; }

 private:
  Violation violation_;
};

// Scans cells (i, k) in row-major order and returns the first violation of
// reflexivity, lower triangularity or transitivity. Requires a square
// matrix (DimensionMismatch otherwise).
std::optional<Violation> find_violation(const BitMatrix& m);

// Binary unit lower-triangular transitive matrix: a naturally labelled
// partial order on [n], where x <= y iff a_yx = 1. Immutable once built.
// Order 0 is allowed and stands for an empty block.
class PosetMatrix {
 public:
  PosetMatrix() = default;

  static PosetMatrix identity(int n);
  static PosetMatrix chain(int n);

  int order() const noexcept { return matrix_.rows(); }
  bool get(int i, int j) const { return matrix_.get(i, j); }
  Word row_word(int i) const { return matrix_.row_word(i); }
  const BitMatrix& matrix() const noexcept { return matrix_; }

  // x <= y in the associated order.
  bool leq(int x, int y) const { return matrix_.get(y, x); }

  std::string to_string() const { return matrix_.to_string(); }

  bool operator==(const PosetMatrix&) const = default;

 private:
  explicit PosetMatrix(BitMatrix m) : matrix_(std::move(m)) {}

  friend PosetMatrix validate(const BitMatrix& m);
  friend PosetMatrix unchecked_poset(BitMatrix m);

  BitMatrix matrix_;
};

// Throws ValidationError with the first violation, DimensionMismatch when
// m is not square.
PosetMatrix validate(const BitMatrix& m);

// Parses the "100;110;111" shorthand and validates it.
PosetMatrix poset(std::string_view rows_text);

// For producers that guarantee the invariants by construction.
PosetMatrix unchecked_poset(BitMatrix m);

inline bool lex_less(const PosetMatrix& a, const PosetMatrix& b) {
  return lex_less(a.matrix(), b.matrix());
}

// The five blocks around insertion position i:
//
//   [ a11   | 0 | 0   ]
//   [ a_row | 1 | 0   ]
//   [ a21   | a_col | a22 ]
struct BlockView {
  int i = 0;
  PosetMatrix a11;
  BitVector a_row;  // length i-1
  BitVector a_col;  // length n-i
  BitMatrix a21;    // (n-i) x (i-1)
  PosetMatrix a22;
};

BlockView block_decompose(const PosetMatrix& a, int i);
PosetMatrix reassemble(const BlockView& blocks);

BitMatrix submatrix(const BitMatrix& a, const IndexSet& rows,
                    const IndexSet& cols);
inline BitMatrix submatrix(const PosetMatrix& a, const IndexSet& rows,
                           const IndexSet& cols) {
  return submatrix(a.matrix(), rows, cols);
}

// A[alpha]; alpha must be nonempty.
PosetMatrix principal_subposet(const PosetMatrix& a, const IndexSet& alpha);

// i is minimal iff its row left of the diagonal is empty or zero.
IndexSet minimal_elements(const PosetMatrix& a);
// i is maximal iff its column below the diagonal is empty or zero.
IndexSet maximal_elements(const PosetMatrix& a);

// Transitive reduction: pairs (i, j), i < j, with j covering i, sorted by
// (i, j).
std::vector<std::pair<int, int>> cover_relation(const PosetMatrix& a);

}  // namespace posetop

#endif  // POSETOP_POSET_MATRIX_HPP_
