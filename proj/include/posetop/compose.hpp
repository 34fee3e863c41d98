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

#ifndef POSETOP_COMPOSE_HPP_
#define POSETOP_COMPOSE_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "posetop/bit_matrix.hpp"
#include "posetop/poset_matrix.hpp"

namespace posetop {

// Constant fills (U, A21, V) of a boxed insertion, 1 meaning all-ones.
struct BoxFill {
  bool u = false;
  bool a21 = false;
  bool v = false;

  bool operator==(const BoxFill&) const = default;
};

// One of the eleven partial compositions. The boxed fill (1, 0, 1) would
// break transitivity and cannot be constructed.
class CompositionKind {
 public:
  enum class Tag { Square, Min, Max, MinMax, Boxed };

  static CompositionKind square() { return CompositionKind(Tag::Square); }
  static CompositionKind min() { return CompositionKind(Tag::Min); }
  static CompositionKind max() { return CompositionKind(Tag::Max); }
  static CompositionKind minmax() { return CompositionKind(Tag::MinMax); }
  // Throws PreconditionViolated for the forbidden (1, 0, 1) fill.
  static CompositionKind boxed(bool u, bool a21, bool v);
  static CompositionKind boxed(BoxFill fill) {
    return boxed(fill.u, fill.a21, fill.v);
  }

  // Square, Min, Max, MinMax, then the seven boxes in the order
  // 111, 010, 110, 011, 000, 001, 100.
  static const std::array<CompositionKind, 11>& all();

  // "square", "min", "max", "minmax" or "boxed:UAV" with U, A, V in {0,1}.
  static CompositionKind parse(std::string_view name);

  Tag tag() const noexcept { return tag_; }
  bool is_boxed() const noexcept { return tag_ == Tag::Boxed; }
  const BoxFill& fill() const noexcept { return fill_; }

  std::string name() const;

  bool operator==(const CompositionKind&) const = default;

 private:
  explicit CompositionKind(Tag tag, BoxFill fill = {}) : tag_(tag), fill_(fill) {}

  Tag tag_;
  BoxFill fill_;
};

// Masks are plain materialised matrices.
using MaskMatrix = BitMatrix;

// General insertion: a_ii replaced by b, the row A_(i) by u (m x (i-1))
// and the column A^(i) by v ((n-i) x m). No validity check on the result.
BitMatrix insert(const PosetMatrix& a, int i, const PosetMatrix& b,
                 const MaskMatrix& u, const MaskMatrix& v);

// m stacked copies of A_(i), and m side-by-side copies of A^(i).
MaskMatrix row_replication(const PosetMatrix& a, int i, int m);
MaskMatrix column_replication(const PosetMatrix& a, int i, int m);

// (n-i) x m; column j is A^(i) when j is minimal in b, zero otherwise.
MaskMatrix min_mask(const PosetMatrix& a, int i, const PosetMatrix& b);
// m x (i-1); row j is A_(i) when j is maximal in b, zero otherwise.
MaskMatrix max_mask(const PosetMatrix& a, int i, const PosetMatrix& b);

PosetMatrix square_compose(const PosetMatrix& a, int i, const PosetMatrix& b);
PosetMatrix min_compose(const PosetMatrix& a, int i, const PosetMatrix& b);
PosetMatrix max_compose(const PosetMatrix& a, int i, const PosetMatrix& b);
// Closed on poset matrices, but not an operad.
PosetMatrix minmax_compose(const PosetMatrix& a, int i, const PosetMatrix& b);

// True when A21 at position i has the fill demanded by the box. An empty
// A21 (i = 1 or i = n) satisfies either fill.
bool boxed_precondition_holds(const PosetMatrix& a, int i, BoxFill fill);

// Fills U and V with the box constants; A's own row and column at i are
// discarded. Throws PreconditionViolated when A21 has the wrong fill.
PosetMatrix boxed_insert(const PosetMatrix& a, int i, const PosetMatrix& b,
                         BoxFill fill);

PosetMatrix compose(const CompositionKind& kind, const PosetMatrix& a, int i,
                    const PosetMatrix& b);

// Like compose, but an unmet boxed precondition yields nullopt instead of
// throwing. Index errors still throw.
std::optional<PosetMatrix> try_compose(const CompositionKind& kind,
                                       const PosetMatrix& a, int i,
                                       const PosetMatrix& b);

}  // namespace posetop

#endif  // POSETOP_COMPOSE_HPP_
