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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "oracle.hpp"
#include "posetop/compose.hpp"
#include "posetop/enumerate.hpp"
#include "posetop/structure.hpp"

using namespace posetop;

namespace {

// The catalog of small posets, one representative per class.
const std::vector<std::string> kConnected3 = {"100;110;111", "100;010;111",
                                              "100;110;101"};
const std::vector<std::string> kDisconnected3 = {"100;010;001", "100;110;001"};
const std::vector<std::string> kConnected4 = {
    "1000;1100;1110;1101", "1000;0100;1110;1111", "1000;1100;1110;1111",
    "1000;1100;1010;1111", "1000;0100;1110;1101", "1000;1100;1010;1001",
    "1000;0100;0010;1111", "1000;1100;0010;1111", "1000;1100;1110;1001",
    "1000;0100;1110;1001"};
const std::vector<std::string> kDisconnected4 = {
    "1000;1100;0010;0011", "1000;0100;0010;0001", "1000;0100;0010;0011",
    "1000;1100;1110;0001", "1000;0100;0010;0111", "1000;0100;0110;0101"};

std::vector<int> random_linear_extension(const PosetMatrix& a,
                                         std::mt19937_64& rng) {
  const int n = a.order();
  std::vector<int> perm;
  std::vector<bool> used(n + 1, false);
  while (static_cast<int>(perm.size()) < n) {
    std::vector<int> ready;
    for (int x = 1; x <= n; ++x) {
      if (used[x]) continue;
      bool ok = true;
      for (int y = 1; y <= n && ok; ++y) {
        if (y != x && !used[y] && a.get(x, y)) ok = false;
      }
      if (ok) ready.push_back(x);
    }
    const int pick = ready[std::uniform_int_distribution<std::size_t>(
        0, ready.size() - 1)(rng)];
    used[pick] = true;
    perm.push_back(pick);
  }
  return perm;
}

void check_catalog(const std::vector<std::string>& listing, int n,
                   bool connected) {
  const auto all = generate_all(n);
  std::set<std::string> seen;
  for (const auto& text : listing) {
    CAPTURE(text);
    const PosetMatrix a = poset(text);
    CHECK(std::find(all.begin(), all.end(), a) != all.end());
    CHECK(is_connected(a) == connected);
    CHECK(seen.insert(canonical_form(a).matrix().encoding()).second);
  }
  const auto filtered =
      classes(n, connected ? ClassFilter::Connected : ClassFilter::Disconnected);
  CHECK(filtered.size() == listing.size());
  for (const auto& c : filtered) CHECK(seen.count(c.canonical.matrix().encoding()) == 1);
}

}  // namespace

TEST_CASE("generate_all agrees with brute force and is sorted") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const auto got = generate_all(n);
    const auto want = oracle::all_posets(n);
    REQUIRE(got.size() == want.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      CHECK(oracle::grid(got[k]) == want[k]);
    }
  }
  const std::vector<std::size_t> counts = {1, 2, 7, 40, 357, 4824};
  for (int n = 1; n <= 6; ++n) CHECK(generate_all(n).size() == counts[n - 1]);
}

TEST_CASE("generate_all bounds") {
  CHECK_THROWS_AS(generate_all(0), IndexOutOfRange);
  CHECK_THROWS_AS(generate_all(9), ResourceLimit);
  CHECK_THROWS_AS(generate_all(5, 4), ResourceLimit);
  CHECK(generate_all(2, 2).size() == 2);
}

TEST_CASE("class counts") {
  const std::vector<std::size_t> totals = {1, 2, 5, 16, 63, 318};
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const auto all = classes(n);
    CHECK(all.size() == totals[n - 1]);
    long labeled = 0;
    std::size_t connected = 0;
    for (const auto& c : all) {
      labeled += c.labeled_count;
      connected += c.connected;
      CHECK(c.connected == is_connected(c.canonical));
    }
    CHECK(labeled == static_cast<long>(generate_all(n).size()));
    CHECK(classes(n, ClassFilter::Connected).size() == connected);
    CHECK(classes(n, ClassFilter::Disconnected).size() == all.size() - connected);
  }
  CHECK(classes(3, ClassFilter::Connected).size() == 3);
  CHECK(classes(3, ClassFilter::Disconnected).size() == 2);
  CHECK(classes(4, ClassFilter::Connected).size() == 10);
  CHECK(classes(4, ClassFilter::Disconnected).size() == 6);
}

TEST_CASE("the displayed catalogs are complete and pairwise non-isomorphic") {
  check_catalog(kConnected3, 3, true);
  check_catalog(kDisconnected3, 3, false);
  check_catalog(kConnected4, 4, true);
  check_catalog(kDisconnected4, 4, false);
}

TEST_CASE("canonical form matches the permutation minimum") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& a : generate_all(n)) {
      CAPTURE(a.to_string());
      CHECK(oracle::grid(canonical_form(a)) == oracle::canonical(oracle::grid(a)));
    }
  }
  // Order six against the oracle on a deterministic sample.
  const auto six = generate_all(6);
  for (std::size_t k = 0; k < six.size(); k += 37) {
    CHECK(oracle::grid(canonical_form(six[k])) ==
          oracle::canonical(oracle::grid(six[k])));
  }
}

TEST_CASE("canonical form is idempotent and constant on classes") {
  std::mt19937_64 rng(20261014);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& a : generate_all(n)) {
      const PosetMatrix c = canonical_form(a);
      CHECK(canonical_form(c) == c);
      CHECK(c.matrix().encoding() <= a.matrix().encoding());
      const auto perm = random_linear_extension(a, rng);
      CHECK(canonical_form(relabel(a, perm)) == c);
    }
  }
}

TEST_CASE("relabel") {
  const PosetMatrix a = poset("100;110;101");
  const std::vector<int> swap = {1, 3, 2};
  CHECK(relabel(a, swap) == a);
  const PosetMatrix n4 = poset("1000;0100;1110;0101");
  const std::vector<int> perm = {2, 1, 4, 3};
  CHECK(relabel(n4, perm).to_string() == "1000;0100;1010;1101");
  const std::vector<int> reverse = {3, 2, 1};
  CHECK_THROWS_AS(relabel(a, reverse), ValidationError);
  const std::vector<int> short_perm = {1, 2};
  CHECK_THROWS(relabel(a, short_perm));
  const std::vector<int> repeated = {1, 1, 2};
  CHECK_THROWS(relabel(a, repeated));
  CHECK_THROWS_AS(canonical_form(PosetMatrix::chain(9)), ResourceLimit);
}

TEST_CASE("compositions of small classes stay inside the class list") {
  std::set<std::string> known[7];
  for (int n = 1; n <= 6; ++n) {
    for (const auto& c : classes(n)) known[n].insert(c.canonical.matrix().encoding());
  }
  for (const auto& kind : CompositionKind::all()) {
    for (int n = 1; n <= 3; ++n) {
      for (int m = 1; m <= 3; ++m) {
        for (const auto& a : classes(n)) {
          for (const auto& b : classes(m)) {
            for (int i = 1; i <= n; ++i) {
              const auto c = try_compose(kind, a.canonical, i, b.canonical);
              if (!c) continue;
              CHECK(known[n + m - 1].count(canonical_form(*c).matrix().encoding()) == 1);
            }
          }
        }
      }
    }
  }
}
