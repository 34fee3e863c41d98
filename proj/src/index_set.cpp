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

#include "posetop/index_set.hpp"

#include "posetop/errors.hpp"

namespace posetop {

IndexSet::IndexSet(std::initializer_list<int> indices)
    : IndexSet(std::vector<int>(indices)) {}

IndexSet::IndexSet(std::vector<int> indices) : indices_(std::move(indices)) {
  for (std::size_t p = 0; p < indices_.size(); ++p) {
    if (indices_[p] < 1) {
      throw IndexOutOfRange("index " + std::to_string(indices_[p]) +
                            " is not positive");
    }
    if (p > 0 && indices_[p] <= indices_[p - 1]) {
      throw IndexOutOfRange("index set must be strictly increasing");
    }
  }
}

IndexSet IndexSet::range(int first, int last) {
  std::vector<int> v;
  for (int p = first; p <= last; ++p) v.push_back(p);
  return IndexSet(std::move(v));
}

IndexSet IndexSet::from_mask(Word mask) {
  std::vector<int> v;
  while (mask != 0) {
    v.push_back(__builtin_ctzll(mask) + 1);
    mask &= mask - 1;
  }
  return IndexSet(std::move(v));
}

Word IndexSet::mask() const noexcept {
  Word m = 0;
  for (int p : indices_) {
    if (p <= kMaxOrder) m |= Word{1} << (p - 1);
  }
  return m;
}

bool IndexSet::contains(int index) const noexcept {
  for (int p : indices_) {
    if (p == index) return true;
  }
  return false;
}

bool IndexSet::is_contiguous() const noexcept {
  return indices_.empty() ||
         indices_.back() - indices_.front() + 1 == size();
}

void IndexSet::check_within(int n) const {
  if (!indices_.empty() && indices_.back() > n) {
    throw IndexOutOfRange("index " + std::to_string(indices_.back()) +
                          " outside [1, " + std::to_string(n) + "]");
  }
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  for (std::size_t p = 0; p < indices_.size(); ++p) {
    if (p > 0) s.push_back(',');
    s += std::to_string(indices_[p]);
  }
  s.push_back('}');
  return s;
}

}  // namespace posetop
