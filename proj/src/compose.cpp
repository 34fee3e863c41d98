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

#include "posetop/compose.hpp"

namespace posetop {

namespace {

void check_position(const PosetMatrix& a, int i) {
  if (i < 1 || i > a.order()) {
    throw IndexOutOfRange("insertion position " + std::to_string(i) +
                          " outside [1, " + std::to_string(a.order()) + "]");
  }
}

Word column_bits(const PosetMatrix& a, int i) {
  Word col = 0;
  for (int r = i + 1; r <= a.order(); ++r) {
    col |= ((a.row_word(r) >> (i - 1)) & 1U) << (r - i - 1);
  }
  return col;
}

}  // namespace

CompositionKind CompositionKind::boxed(bool u, bool a21, bool v) {
  if (u && v && !a21) {
    throw PreconditionViolated("boxed fill (U, A21, V)",
                               "anything but (1, 0, 1), which breaks "
                               "transitivity");
  }
  return CompositionKind(Tag::Boxed, BoxFill{u, a21, v});
}

const std::array<CompositionKind, 11>& CompositionKind::all() {
  static const std::array<CompositionKind, 11> kinds = {
      square(),
      min(),
      max(),
      minmax(),
      boxed(true, true, true),
      boxed(false, true, false),
      boxed(true, true, false),
      boxed(false, true, true),
      boxed(false, false, false),
      boxed(false, false, true),
      boxed(true, false, false),
  };
  return kinds;
}

CompositionKind CompositionKind::parse(std::string_view name) {
  if (name == "square") return square();
  if (name == "min") return min();
  if (name == "max") return max();
  if (name == "minmax") return minmax();
  constexpr std::string_view prefix = "boxed:";
  if (name.substr(0, prefix.size()) == prefix) {
    const std::string_view bits = name.substr(prefix.size());
    auto bit = [&](char c) {
      if (c == '0') return false;
      if (c == '1') return true;
      throw Error("boxed kind needs three 0/1 digits, got '" +
                  std::string(bits) + "'");
    };
    if (bits.size() != 3) {
      throw Error("boxed kind needs three 0/1 digits, got '" +
                  std::string(bits) + "'");
    }
    return boxed(bit(bits[0]), bit(bits[1]), bit(bits[2]));
  }
  throw Error("unknown composition kind '" + std::string(name) + "'");
}

std::string CompositionKind::name() const {
  switch (tag_) {
    case Tag::Square:
      return "square";
    case Tag::Min:
      return "min";
    case Tag::Max:
      return "max";
    case Tag::MinMax:
      return "minmax";
    case Tag::Boxed:
      return std::string("boxed:") + (fill_.u ? '1' : '0') +
             (fill_.a21 ? '1' : '0') + (fill_.v ? '1' : '0');
  }
  return "unknown";
}

BitMatrix insert(const PosetMatrix& a, int i, const PosetMatrix& b,
                 const MaskMatrix& u, const MaskMatrix& v) {
  check_position(a, i);
  const int n = a.order();
  const int m = b.order();
  if (u.rows() != m || u.cols() != i - 1) {
    throw DimensionMismatch("U must be " + std::to_string(m) + "x" +
                            std::to_string(i - 1) + ", got " +
                            std::to_string(u.rows()) + "x" +
                            std::to_string(u.cols()));
  }
  if (v.rows() != n - i || v.cols() != m) {
    throw DimensionMismatch("V must be " + std::to_string(n - i) + "x" +
                            std::to_string(m) + ", got " +
                            std::to_string(v.rows()) + "x" +
                            std::to_string(v.cols()));
  }
  const int size = n + m - 1;
  if (size > kMaxOrder) {
    throw ResourceLimit("composite order " + std::to_string(size) +
                        " exceeds 64");
  }
  BitMatrix out(size, size);
  const int left = i - 1;
  for (int r = 1; r < i; ++r) out.set_row_word(r, a.row_word(r));
  for (int r = 1; r <= m; ++r) {
    out.set_row_word(left + r, u.row_word(r) | (b.row_word(r) << left));
  }
  const Word a21_mask = low_mask(left);
  for (int r = 1; r <= n - i; ++r) {
    const Word w = a.row_word(i + r);
    out.set_row_word(left + m + r, (w & a21_mask) | (v.row_word(r) << left) |
                                       ((w >> i) << (left + m)));
  }
  return out;
}

MaskMatrix row_replication(const PosetMatrix& a, int i, int m) {
  check_position(a, i);
  MaskMatrix u(m, i - 1);
  const Word row = a.row_word(i) & low_mask(i - 1);
  for (int r = 1; r <= m; ++r) u.set_row_word(r, row);
  return u;
}

MaskMatrix column_replication(const PosetMatrix& a, int i, int m) {
  check_position(a, i);
  MaskMatrix v(a.order() - i, m);
  const Word col = column_bits(a, i);
  for (int r = 1; r <= a.order() - i; ++r) {
    if ((col >> (r - 1)) & 1U) v.set_row_word(r, low_mask(m));
  }
  return v;
}

MaskMatrix min_mask(const PosetMatrix& a, int i, const PosetMatrix& b) {
  check_position(a, i);
  const Word minimal = minimal_elements(b).mask();
  MaskMatrix v(a.order() - i, b.order());
  const Word col = column_bits(a, i);
  for (int r = 1; r <= a.order() - i; ++r) {
    if ((col >> (r - 1)) & 1U) v.set_row_word(r, minimal);
  }
  return v;
}

MaskMatrix max_mask(const PosetMatrix& a, int i, const PosetMatrix& b) {
  check_position(a, i);
  const Word maximal = maximal_elements(b).mask();
  const Word row = a.row_word(i) & low_mask(i - 1);
  MaskMatrix u(b.order(), i - 1);
  for (int r = 1; r <= b.order(); ++r) {
    if ((maximal >> (r - 1)) & 1U) u.set_row_word(r, row);
  }
  return u;
}

PosetMatrix square_compose(const PosetMatrix& a, int i, const PosetMatrix& b) {
  return validate(insert(a, i, b, row_replication(a, i, b.order()),
                         column_replication(a, i, b.order())));
}

PosetMatrix min_compose(const PosetMatrix& a, int i, const PosetMatrix& b) {
  return validate(
      insert(a, i, b, row_replication(a, i, b.order()), min_mask(a, i, b)));
}

PosetMatrix max_compose(const PosetMatrix& a, int i, const PosetMatrix& b) {
  return validate(insert(a, i, b, max_mask(a, i, b),
                         column_replication(a, i, b.order())));
}

PosetMatrix minmax_compose(const PosetMatrix& a, int i, const PosetMatrix& b) {
  return validate(insert(a, i, b, max_mask(a, i, b), min_mask(a, i, b)));
}

bool boxed_precondition_holds(const PosetMatrix& a, int i, BoxFill fill) {
  check_position(a, i);
  const Word a21_mask = low_mask(i - 1);
  for (int r = i + 1; r <= a.order(); ++r) {
    const Word w = a.row_word(r) & a21_mask;
    if (w != (fill.a21 ? a21_mask : Word{0})) return false;
  }
  return true;
}

PosetMatrix boxed_insert(const PosetMatrix& a, int i, const PosetMatrix& b,
                         BoxFill fill) {
  // Reject (1, 0, 1) even when handed a raw BoxFill.
  CompositionKind::boxed(fill);
  if (!boxed_precondition_holds(a, i, fill)) {
    throw PreconditionViolated("A21 at position " + std::to_string(i),
                               fill.a21 ? "all ones" : "all zeros");
  }
  const int m = b.order();
  return validate(insert(a, i, b, MaskMatrix::filled(m, i - 1, fill.u),
                         MaskMatrix::filled(a.order() - i, m, fill.v)));
}

PosetMatrix compose(const CompositionKind& kind, const PosetMatrix& a, int i,
                    const PosetMatrix& b) {
  switch (kind.tag()) {
    case CompositionKind::Tag::Square:
      return square_compose(a, i, b);
    case CompositionKind::Tag::Min:
      return min_compose(a, i, b);
    case CompositionKind::Tag::Max:
      return max_compose(a, i, b);
    case CompositionKind::Tag::MinMax:
      return minmax_compose(a, i, b);
    case CompositionKind::Tag::Boxed:
      return boxed_insert(a, i, b, kind.fill());
  }
  throw Error("unknown composition kind");
}

std::optional<PosetMatrix> try_compose(const CompositionKind& kind,
                                       const PosetMatrix& a, int i,
                                       const PosetMatrix& b) {
  if (kind.is_boxed() && !boxed_precondition_holds(a, i, kind.fill())) {
    return std::nullopt;
  }
  return compose(kind, a, i, b);
}

}  // namespace posetop
