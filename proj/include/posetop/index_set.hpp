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

#ifndef POSETOP_INDEX_SET_HPP_
#define POSETOP_INDEX_SET_HPP_

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "posetop/bit_matrix.hpp"

namespace posetop {

// Strictly increasing list of 1-based indices.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> indices);
  explicit IndexSet(std::vector<int> indices);

  // {first, ..., last}; empty when first > last.
  static IndexSet range(int first, int last);
  static IndexSet full(int n) { return range(1, n); }
  // Bit p-1 of mask selects index p.
  static IndexSet from_mask(Word mask);

  Word mask() const noexcept;

  int size() const noexcept { return static_cast<int>(indices_.size()); }
  bool empty() const noexcept { return indices_.empty(); }
  std::span<const int> indices() const noexcept { return indices_; }
  auto begin() const noexcept { return indices_.begin(); }
  auto end() const noexcept { return indices_.end(); }
  int front() const { return indices_.front(); }
  int back() const { return indices_.back(); }

  bool contains(int index) const noexcept;
  bool is_contiguous() const noexcept;
  // Throws IndexOutOfRange unless every index lies in [1, n].
  void check_within(int n) const;

  // "{1,2,3}"
  std::string to_string() const;

  bool operator==(const IndexSet&) const = default;
  auto operator<=>(const IndexSet&) const = default;

 private:
  std::vector<int> indices_;
};

}  // namespace posetop

#endif  // POSETOP_INDEX_SET_HPP_
