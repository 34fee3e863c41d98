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

#include "posetop/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "posetop/structure.hpp"

namespace posetop {

namespace {

void check_order(int n, int cap) {
  if (n < 1) {
    throw IndexOutOfRange("order must be at least 1, got " +
                          std::to_string(n));
  }
  if (n > cap || n > kMaxOrder) {
    throw ResourceLimit("order " + std::to_string(n) +
                        " exceeds the configured cap " + std::to_string(cap));
  }
}

// Maps bit p of t to bit (width-1-p), so that counting t upwards visits
// the width-bit row prefix in string order (column 1 most significant).
Word reverse_bits(Word t, int width) {
  Word out = 0;
  for (int p = 0; p < width; ++p) {
    if ((t >> p) & 1U) out |= Word{1} << (width - 1 - p);
  }
  return out;
}

void extend(BitMatrix& rows, int r, int n, std::vector<PosetMatrix>& out) {
  if (r > n) {
    out.push_back(unchecked_poset(rows));
    return;
  }
  const int width = r - 1;
  for (Word t = 0; t <= low_mask(width); ++t) {
    const Word below = reverse_bits(t, width);
    // The strict down-set of r must be closed downwards.
    Word closure = below;
    for (Word w = below; w != 0; w &= w - 1) {
      closure |= rows.row_word(std::countr_zero(w) + 1);
    }
    if ((closure & low_mask(width)) != below) continue;
    rows.set_row_word(r, below | (Word{1} << (r - 1)));
    extend(rows, r + 1, n, out);
  }
  rows.set_row_word(r, 0);
}

struct CanonicalSearch {
  const PosetMatrix& a;
  int n;
  std::vector<Word> below;   // strict down-set of each old label
  std::vector<Word> above;   // strict up-set of each old label
  std::vector<int> perm;     // old label at each new position
  std::vector<Word> rows;    // new rows of the current prefix
  std::vector<Word> best;
  bool have_best = false;
  long updates = 0;

  explicit CanonicalSearch(const PosetMatrix& m)
      : a(m), n(m.order()), below(n + 1), above(n + 1), perm(n + 1),
        rows(n + 1), best(n + 1) {
    for (int x = 1; x <= n; ++x) {
      below[x] = a.row_word(x) & ~(Word{1} << (x - 1));
      for (Word w = below[x]; w != 0; w &= w - 1) {
        above[std::countr_zero(w) + 1] |= Word{1} << (x - 1);
      }
    }
  }

  // New row for placing old label x at position r.
  Word row_for(int x, int r) const {
    Word row = Word{1} << (r - 1);
    for (int c = 1; c < r; ++c) {
      if ((below[x] >> (perm[c] - 1)) & 1U) row |= Word{1} << (c - 1);
    }
    return row;
  }

  void run(int r, Word placed, bool tight) {
    if (r > n) {
      best = rows;
      have_best = true;
      ++updates;
      return;
    }
    std::vector<std::pair<int, Word>> candidates;
    for (int x = 1; x <= n; ++x) {
      const Word bit = Word{1} << (x - 1);
      if ((placed & bit) == 0 && (below[x] & ~placed) == 0) {
        candidates.emplace_back(x, row_for(x, r));
      }
    }
    Word least = candidates.front().second;
    for (const auto& [x, row] : candidates) {
      if (compare_row_words(row, least) < 0) least = row;
    }
    bool child_tight = false;
    if (have_best && tight) {
      const auto cmp = compare_row_words(least, best[r]);
      if (cmp > 0) return;
      child_tight = cmp == 0;
    }
    // Available labels are pairwise incomparable; two with the same strict
    // down-set and up-set are exchanged by an automorphism, so one suffices.
    std::vector<std::pair<Word, Word>> tried;
    for (const auto& [x, row] : candidates) {
      if (row != least) continue;
      const std::pair<Word, Word> twin_key{below[x], above[x]};
      if (std::find(tried.begin(), tried.end(), twin_key) != tried.end()) {
        continue;
      }
      tried.push_back(twin_key);
      perm[r] = x;
      rows[r] = row;
      const long before = updates;
      run(r + 1, placed | (Word{1} << (x - 1)), child_tight);
      if (updates != before) child_tight = true;
    }
  }
};

}  // namespace

std::vector<PosetMatrix> generate_all(int n, int cap) {
  check_order(n, cap);
  std::vector<PosetMatrix> out;
  BitMatrix rows(n, n);
  rows.set_row_word(1, 1);
  extend(rows, 2, n, out);
  return out;
}

PosetMatrix relabel(const PosetMatrix& a, std::span<const int> perm) {
  const int n = a.order();
  if (static_cast<int>(perm.size()) != n) {
    throw DimensionMismatch("permutation of length " +
                            std::to_string(perm.size()) + " for order " +
                            std::to_string(n));
  }
  Word seen = 0;
  for (int x : perm) {
    if (x < 1 || x > n || ((seen >> (x - 1)) & 1U)) {
      throw IndexOutOfRange("not a permutation of [" + std::to_string(n) +
                            "]");
    }
    seen |= Word{1} << (x - 1);
  }
  BitMatrix out(n, n);
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      if (a.get(perm[r - 1], perm[c - 1])) out.set(r, c, true);
    }
  }
  return validate(out);
}

PosetMatrix canonical_form(const PosetMatrix& a, int cap) {
  if (a.order() == 0) return a;
  check_order(a.order(), cap);
  CanonicalSearch search(a);
  search.run(1, 0, false);
  BitMatrix out(a.order(), a.order());
  for (int r = 1; r <= a.order(); ++r) out.set_row_word(r, search.best[r]);
  return unchecked_poset(std::move(out));
}

std::vector<IsoClass> classes(int n, ClassFilter filter, int cap) {
  std::map<std::string, IsoClass> by_encoding;
  for (const auto& a : generate_all(n, cap)) {
    const bool connected = is_connected(a);
    if ((filter == ClassFilter::Connected && !connected) ||
        (filter == ClassFilter::Disconnected && connected)) {
      continue;
    }
    const PosetMatrix canon = canonical_form(a, cap);
    auto [it, inserted] = by_encoding.try_emplace(
        canon.matrix().encoding(), IsoClass{canon, 0, connected});
    ++it->second.labeled_count;
  }
  std::vector<IsoClass> out;
  out.reserve(by_encoding.size());
  for (auto& [key, iso] : by_encoding) out.push_back(std::move(iso));
  return out;
}

}  // namespace posetop
