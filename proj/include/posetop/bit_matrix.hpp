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

#ifndef POSETOP_BIT_MATRIX_HPP_
#define POSETOP_BIT_MATRIX_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace posetop {

using Word = std::uint64_t;

// Every matrix keeps one word per row, so orders and widths are capped here.
inline constexpr int kMaxOrder = 64;

constexpr Word low_mask(int k) noexcept {
  return k <= 0 ? Word{0} : (k >= 64 ? ~Word{0} : (Word{1} << k) - 1);
}

// Orders two row words the way their '0'/'1' strings compare, column 1
// first. Column j lives in bit j-1, so the lowest differing bit decides.
constexpr std::strong_ordering compare_row_words(Word a, Word b) noexcept {
  const Word diff = a ^ b;
  if (diff == 0) return std::strong_ordering::equal;
  const Word lowest = diff & (~diff + 1);
  return (a & lowest) != 0 ? std::strong_ordering::greater
                           : std::strong_ordering::less;
}

// Fixed-length bit vector with 1-based positions, length <= 64.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(int size, Word bits = 0);

  int size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  Word bits() const noexcept { return bits_; }
  bool get(int p) const;

  bool all_zero() const noexcept { return bits_ == 0; }
  bool all_ones() const noexcept { return bits_ == low_mask(size_); }

  std::string to_string() const;

  bool operator==(const BitVector&) const = default;

 private:
  int size_ = 0;
  Word bits_ = 0;
};

// Rectangular 0/1 matrix, rows x cols with cols <= 64. Indices in the
// public surface are 1-based; column j of row i is bit j-1 of row_word(i).
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols);

  static BitMatrix identity(int n);
  static BitMatrix filled(int rows, int cols, bool value);
  // Rows given as '0'/'1' strings of equal length.
  static BitMatrix from_strings(std::span<const std::string> rows);
  // Shorthand "100;110;111" used throughout tests and examples.
  static BitMatrix from_text(std::string_view rows_separated_by_semicolon);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  bool get(int i, int j) const;
  void set(int i, int j, bool value);

  Word row_word(int i) const;
  void set_row_word(int i, Word w);
  std::span<const Word> words() const noexcept { return data_; }

  BitVector row(int i) const;
  BitVector column(int j) const;

  bool is_zero() const noexcept;
  bool is_ones() const noexcept;

  BitMatrix transposed() const;

  std::vector<std::string> row_strings() const;
  // Row-major '0'/'1' string; equal-shape matrices order by this string.
  std::string encoding() const;
  // Rows joined with ';'.
  std::string to_string() const;

  bool operator==(const BitMatrix&) const = default;

 private:
  void check_cell(int i, int j) const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Word> data_;
};

// Lexicographic order on encodings, shorter shapes first on prefix ties.
bool lex_less(const BitMatrix& a, const BitMatrix& b);

}  // namespace posetop

#endif  // POSETOP_BIT_MATRIX_HPP_
