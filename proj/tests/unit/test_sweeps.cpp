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

#include <set>

#include "oracle.hpp"
#include "posetop/compose.hpp"
#include "posetop/duality.hpp"
#include "posetop/sweeps.hpp"

using namespace posetop;
using oracle::Grid;

namespace {

std::vector<int> span(int first, int last) {
  std::vector<int> out;
  for (int x = first; x <= last; ++x) out.push_back(x - 1);
  return out;
}

bool all_rows_equal(const Grid& d) {
  for (const auto& row : d) {
    if (row != d.front()) return false;
  }
  return true;
}

bool all_columns_equal(const Grid& d) {
  for (const auto& row : d) {
    for (int x : row) {
      if (x != row.front()) return false;
    }
  }
  return true;
}

bool block_is(const Grid& g, bool connected) {
  const int n = static_cast<int>(g.size());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < r; ++c) {
      if (g[r][c] != static_cast<int>(connected)) return false;
    }
  }
  return true;
}

// Literal hypotheses, written out from the statements.
bool hypothesis(const Grid& a, BlockRule rule, bool connected_family,
                int first, int last) {
  const int n = static_cast<int>(a.size());
  if (!block_is(oracle::sub(a, span(first, last), span(first, last)),
                connected_family)) {
    return false;
  }
  switch (rule) {
    case BlockRule::Leading:
      return all_columns_equal(oracle::sub(a, span(last + 1, n), span(1, last)));
    case BlockRule::Trailing:
      return all_rows_equal(oracle::sub(a, span(first, n), span(1, first - 1)));
    case BlockRule::Interior: {
      const Grid d = oracle::sub(a, span(last, n), span(1, last - 1));
      const auto& top = d.front();
      const bool constant =
          std::all_of(top.begin(), top.end(), [&](int x) { return x == top.front(); });
      return all_rows_equal(d) && constant;
    }
  }
  return false;
}

std::vector<std::pair<int, int>> alphas(BlockRule rule, int n) {
  std::vector<std::pair<int, int>> out;
  switch (rule) {
    case BlockRule::Leading:
      for (int k = 2; k < n; ++k) out.emplace_back(1, k);
      break;
    case BlockRule::Trailing:
      for (int k = 2; k <= n; ++k) out.emplace_back(k, n);
      break;
    case BlockRule::Interior:
      for (int d = 2; d < n; ++d) {
        for (int k = d + 1; k < n; ++k) out.emplace_back(d, k);
      }
      break;
  }
  return out;
}

std::pair<long, long> oracle_invariance(BlockFamily family, BlockRule rule) {
  const bool connected = family == BlockFamily::TotallyConnected;
  long hits = 0;
  long violations = 0;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& a : oracle::all_posets(n)) {
      if (connected && oracle::disconnected_by_subsets(a)) continue;
      for (const auto& [first, last] : alphas(rule, n)) {
        if (!hypothesis(a, rule, connected, first, last)) continue;
        for (int m = 1; m <= 3; ++m) {
          const Grid b = connected ? oracle::chain(m) : oracle::identity(m);
          ++hits;
          std::set<Grid> outputs;
          for (int i = first; i <= last; ++i) outputs.insert(oracle::square(a, i, b));
          violations += outputs.size() > 1;
        }
      }
    }
  }
  return {hits, violations};
}

std::pair<long, long> oracle_semi_equidual(BlockRule rule) {
  long hits = 0;
  long violations = 0;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& a : oracle::all_posets(n)) {
      for (const auto& [first, last] : alphas(rule, n)) {
        if (first == last) continue;
        if (!hypothesis(a, rule, false, first, last)) continue;
        for (int m = 1; m <= 3; ++m) {
          const Grid b = oracle::chain(m);
          ++hits;
          violations += oracle::semi_equidual(oracle::square(a, first, b),
                                              oracle::square(a, last, b))
                            .empty();
        }
      }
    }
  }
  return {hits, violations};
}

}  // namespace

TEST_CASE("identical-output sweeps match the oracle") {
  for (const auto family :
       {BlockFamily::TotallyConnected, BlockFamily::TotallyDisconnected}) {
    for (const auto rule :
         {BlockRule::Leading, BlockRule::Trailing, BlockRule::Interior}) {
      CAPTURE(static_cast<int>(family));
      CAPTURE(static_cast<int>(rule));
      const SweepReport report = sweep_invariance(family, rule, 5, 3);
      const auto [hits, violations] = oracle_invariance(family, rule);
      CHECK(report.hypothesis_hits == hits);
      CHECK(report.violations == violations);
      CHECK(report.hypothesis_hits > 0);
    }
  }
}

TEST_CASE("leading and trailing blocks never violate the identical-output claim") {
  for (const auto family :
       {BlockFamily::TotallyConnected, BlockFamily::TotallyDisconnected}) {
    for (const auto rule : {BlockRule::Leading, BlockRule::Trailing}) {
      const SweepReport report = sweep_invariance(family, rule, 5, 3);
      CHECK(report.violations == 0);
      CHECK_FALSE(report.first_violation);
    }
  }
}

// The interior statement read literally has counterexamples; the counts
// below are measured, not claimed.
TEST_CASE("interior blocks under the literal hypothesis, as measured") {
  const SweepReport tc =
      sweep_invariance(BlockFamily::TotallyConnected, BlockRule::Interior, 5, 3);
  CHECK(tc.hypothesis_hits == 114);
  CHECK(tc.violations == 64);
  REQUIRE(tc.first_violation);
  const SweepCase& w = *tc.first_violation;
  CHECK(invariance_hypothesis(w.a, BlockFamily::TotallyConnected,
                              BlockRule::Interior, w.first, w.last));
  const PosetMatrix b = PosetMatrix::chain(w.m);
  CHECK(square_compose(w.a, w.first, b) != square_compose(w.a, w.last, b));

  // The witness recorded in the notes.
  const PosetMatrix a = poset("1000;0100;1110;1101");
  CHECK(invariance_hypothesis(a, BlockFamily::TotallyConnected,
                              BlockRule::Interior, 2, 3));
  CHECK(square_compose(a, 2, PosetMatrix::chain(2)) !=
        square_compose(a, 3, PosetMatrix::chain(2)));

  const SweepReport td = sweep_invariance(BlockFamily::TotallyDisconnected,
                                          BlockRule::Interior, 5, 3);
  CHECK(td.hypothesis_hits == 120);
  CHECK(td.violations == 68);
}

TEST_CASE("interior blocks under the repaired hypothesis") {
  for (const auto family :
       {BlockFamily::TotallyConnected, BlockFamily::TotallyDisconnected}) {
    const SweepReport report = sweep_invariance(
        family, BlockRule::Interior, 5, 3, InteriorReading::Repaired);
    CHECK(report.hypothesis_hits > 0);
    CHECK(report.violations == 0);
  }
  const SweepReport semi =
      sweep_semi_equidual(5, BlockRule::Interior, 3, InteriorReading::Repaired);
  CHECK(semi.hypothesis_hits > 0);
  CHECK(semi.violations == 0);
}

TEST_CASE("semi-equidual sweeps match the oracle") {
  for (const auto rule :
       {BlockRule::Leading, BlockRule::Trailing, BlockRule::Interior}) {
    CAPTURE(static_cast<int>(rule));
    const SweepReport report = sweep_semi_equidual(5, rule, 3);
    const auto [hits, violations] = oracle_semi_equidual(rule);
    CHECK(report.hypothesis_hits == hits);
    CHECK(report.violations == violations);
  }
  CHECK(sweep_semi_equidual(5, BlockRule::Leading, 3).violations == 0);
  CHECK(sweep_semi_equidual(5, BlockRule::Trailing, 3).violations == 0);
  const SweepReport interior = sweep_semi_equidual(5, BlockRule::Interior, 3);
  CHECK(interior.hypothesis_hits == 120);
  CHECK(interior.violations == 52);
}

TEST_CASE("the worked semi-equidual composites") {
  const PosetMatrix chain2 = PosetMatrix::chain(2);
  SUBCASE("trailing antichain block") {
    const PosetMatrix a = poset("1000;1100;1010;1001");
    CHECK(invariance_hypothesis(a, BlockFamily::TotallyDisconnected,
                                BlockRule::Trailing, 2, 4));
    const PosetMatrix g = square_compose(a, 2, chain2);
    const PosetMatrix h = square_compose(a, 4, chain2);
    CHECK(g.to_string() == "10000;11000;11100;10010;10001");
    CHECK(h.to_string() == "10000;11000;10100;10010;10011");
    CHECK(semi_equidual(g, h).has_value());
  }
  SUBCASE("leading antichain block") {
    const PosetMatrix a = poset("1000;0100;1110;1111");
    const PosetMatrix e = square_compose(a, 1, chain2);
    const PosetMatrix f = square_compose(a, 2, chain2);
    CHECK(e.to_string() == "10000;11000;00100;11110;11111");
    CHECK(f.to_string() == "10000;01000;01100;11110;11111");
    const auto w = semi_equidual(e, f);
    REQUIRE(w);
    CHECK(w->alpha == IndexSet{1, 2, 3});
  }
}
