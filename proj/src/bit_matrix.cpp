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

#include "posetop/bit_matrix.hpp"

#include <algorithm>

#include "posetop/errors.hpp"

namespace posetop {

BitVector::BitVector(int size, Word bits) : size_(size), bits_(bits) {
  if (size < 0 || size > kMaxOrder) {
    throw ResourceLimit("bit vector length " + std::to_string(size) +
                        " outside [0, 64]");
  }
  bits_ &= low_mask(size);
}

bool BitVector::get(int p) const {
  if (p < 1 || p > size_) {
    throw IndexOutOfRange("bit vector position " + std::to_string(p) +
                          " outside [1, " + std::to_string(size_) + "]");
  }
  return (bits_ >> (p - 1)) & 1U;
}

std::string BitVector::to_string() const {
  std::string s(static_cast<std::size_t>(size_), '0');
  for (int p = 0; p < size_; ++p) {
    if ((bits_ >> p) & 1U) s[static_cast<std::size_t>(p)] = '1';
  }
  return s;
}

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw DimensionMismatch("negative matrix dimension");
  }
  if (cols > kMaxOrder) {
    throw ResourceLimit("matrix width " + std::to_string(cols) +
                        " exceeds 64 columns");
  }
  data_.assign(static_cast<std::size_t>(rows), Word{0});
}

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.data_[static_cast<std::size_t>(i)] = Word{1} << i;
  return m;
}

BitMatrix BitMatrix::filled(int rows, int cols, bool value) {
  BitMatrix m(rows, cols);
  if (value) std::fill(m.data_.begin(), m.data_.end(), low_mask(cols));
  return m;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  BitMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    const std::string& s = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(s.size()) != c) {
      throw DimensionMismatch("ragged rows: row " + std::to_string(i + 1) +
                              " has length " + std::to_string(s.size()));
    }
    Word w = 0;
    for (int j = 0; j < c; ++j) {
      const char ch = s[static_cast<std::size_t>(j)];
      if (ch == '1') {
        w |= Word{1} << j;
      } else if (ch != '0') {
        throw DimensionMismatch(std::string("invalid bit character '") + ch +
                                "'");
      }
    }
    m.data_[static_cast<std::size_t>(i)] = w;
  }
  return m;
}

BitMatrix BitMatrix::from_text(std::string_view text) {
  std::vector<std::string> rows;
  std::string current;
  for (char ch : text) {
    if (ch == ';') {
      rows.push_back(current);
      current.clear();
    } else if (ch != ' ') {
      current.push_back(ch);
    }
  }
  if (!current.empty() || !rows.empty()) rows.push_back(current);
  return from_strings(rows);
}

void BitMatrix::check_cell(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    throw IndexOutOfRange("cell (" + std::to_string(i) + "," +
                          std::to_string(j) + ") outside " +
                          std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

bool BitMatrix::get(int i, int j) const {
  check_cell(i, j);
  return (data_[static_cast<std::size_t>(i - 1)] >> (j - 1)) & 1U;
}

void BitMatrix::set(int i, int j, bool value) {
  check_cell(i, j);
  Word& w = data_[static_cast<std::size_t>(i - 1)];
  const Word bit = Word{1} << (j - 1);
  w = value ? (w | bit) : (w & ~bit);
}

Word BitMatrix::row_word(int i) const {
  if (i < 1 || i > rows_) {
    throw IndexOutOfRange("row " + std::to_string(i) + " outside [1, " +
                          std::to_string(rows_) + "]");
  }
  return data_[static_cast<std::size_t>(i - 1)];
}

void BitMatrix::set_row_word(int i, Word w) {
  if (i < 1 || i > rows_) {
    throw IndexOutOfRange("row " + std::to_string(i) + " outside [1, " +
                          std::to_string(rows_) + "]");
  }
  data_[static_cast<std::size_t>(i - 1)] = w & low_mask(cols_);
}

BitVector BitMatrix::row(int i) const { return BitVector(cols_, row_word(i)); }

BitVector BitMatrix::column(int j) const {
  if (j < 1 || j > cols_) {
    throw IndexOutOfRange("column " + std::to_string(j) + " outside [1, " +
                          std::to_string(cols_) + "]");
  }
  Word bits = 0;
  for (int i = 0; i < rows_; ++i) {
    bits |= ((data_[static_cast<std::size_t>(i)] >> (j - 1)) & 1U) << i;
  }
  return BitVector(rows_, bits);
}

bool BitMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(),
                     [](Word w) { return w == 0; });
}

bool BitMatrix::is_ones() const noexcept {
  const Word full = low_mask(cols_);
  return std::all_of(data_.begin(), data_.end(),
                     [full](Word w) { return w == full; });
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    Word w = data_[static_cast<std::size_t>(i)];
    while (w != 0) {
      const int j = __builtin_ctzll(w);
      t.data_[static_cast<std::size_t>(j)] |= Word{1} << i;
      w &= w - 1;
    }
  }
  return t;
}

std::vector<std::string> BitMatrix::row_strings() const {
  std::vector<std::string> out;
  out.reserve(data_.size());
  for (Word w : data_) out.push_back(BitVector(cols_, w).to_string());
  return out;
}

std::string BitMatrix::encoding() const {
  std::string s;
  s.reserve(static_cast<std::size_t>(rows_ * cols_));
  for (Word w : data_) s += BitVector(cols_, w).to_string();
  return s;
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (int i = 0; i < rows_; ++i) {
    if (i > 0) s.push_back(';');
    s += BitVector(cols_, data_[static_cast<std::size_t>(i)]).to_string();
  }
  return s;
}

bool lex_less(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() == b.rows() && a.cols() == b.cols()) {
    for (int i = 1; i <= a.rows(); ++i) {
      const auto c = compare_row_words(a.row_word(i), b.row_word(i));
      if (c != 0) return c < 0;
    }
    return false;
  }
  return a.encoding() < b.encoding();
}

}  // namespace posetop
