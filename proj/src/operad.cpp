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

#include "posetop/operad.hpp"

#include <random>
#include <tuple>

#include "posetop/enumerate.hpp"

namespace posetop {

std::string law_name(Law law) {
  switch (law) {
    case Law::NestedAssoc:
      return "nested";
    case Law::ParallelAssoc:
      return "parallel";
    case Law::Unit:
      return "unit";
  }
  return "unknown";
}

namespace {

void check_index(const char* what, int index, int order) {
  if (index < 1 || index > order) {
    throw IndexOutOfRange(std::string(what) + " = " + std::to_string(index) +
                          " outside [1, " + std::to_string(order) + "]");
  }
}

LawCheck compare(std::optional<PosetMatrix> left,
                 std::optional<PosetMatrix> right) {
  LawCheck out;
  out.defined = left.has_value() && right.has_value();
  out.equal = !out.defined || *left == *right;
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

std::optional<PosetMatrix> then(const CompositionKind& kind,
                                const std::optional<PosetMatrix>& outer,
                                int i, const PosetMatrix& inner) {
  if (!outer) return std::nullopt;
  return try_compose(kind, *outer, i, inner);
}

}  // namespace

LawCheck check_nested(const CompositionKind& kind, const PosetMatrix& a,
                      const PosetMatrix& b, const PosetMatrix& c, int i,
                      int j) {
  check_index("i", i, a.order());
  check_index("j", j, b.order());
  auto left = then(kind, try_compose(kind, a, i, b), i + j - 1, c);
  const auto inner = try_compose(kind, b, j, c);
  std::optional<PosetMatrix> right;
  if (inner) right = try_compose(kind, a, i, *inner);
  return compare(std::move(left), std::move(right));
}

LawCheck check_parallel(const CompositionKind& kind, const PosetMatrix& a,
                        const PosetMatrix& b, const PosetMatrix& c, int i,
                        int j) {
  check_index("i", i, a.order());
  check_index("j", j, a.order());
  if (i >= j) {
    throw RequiresDistinctIndices("parallel law needs i < j, got i = " +
                                  std::to_string(i) +
                                  ", j = " + std::to_string(j));
  }
  auto left =
      then(kind, try_compose(kind, a, i, b), j + b.order() - 1, c);
  auto right = then(kind, try_compose(kind, a, j, c), i, b);
  return compare(std::move(left), std::move(right));
}

LawCheck check_unit(const CompositionKind& kind, const PosetMatrix& a, int i) {
  check_index("i", i, a.order());
  const PosetMatrix unit = PosetMatrix::identity(1);
  LawCheck out;
  out.left = try_compose(kind, unit, 1, a);
  out.right = try_compose(kind, a, i, unit);
  out.defined = out.left.has_value() && out.right.has_value();
  out.equal = !out.defined || (*out.left == a && *out.right == a);
  return out;
}

namespace {

using WitnessKey = std::tuple<int, std::string, std::string, std::string, int,
                              int>;

WitnessKey key_of(const LawWitness& w) {
  const int total = w.a.order() + (w.b ? w.b->order() : 0) +
                    (w.c ? w.c->order() : 0);
  return {total,
          w.a.matrix().encoding(),
          w.b ? w.b->matrix().encoding() : std::string(),
          w.c ? w.c->matrix().encoding() : std::string(),
          w.i,
          w.j};
}

class Recorder {
 public:
  Recorder(Law law, const CompositionKind& kind,
           const std::function<void(Law, const LawWitness&)>& observer)
      : observer_(observer) {
    report_.law = law;
    report_.kind = kind;
  }

  void record(const LawCheck& check, const PosetMatrix& a,
              const PosetMatrix* b, const PosetMatrix* c, int i, int j) {
    if (!check.defined) {
      ++report_.cases_skipped;
      return;
    }
    ++report_.cases_checked;
    if (check.equal) return;
    ++report_.failures;
    LawWitness w{a,
                 b ? std::optional<PosetMatrix>(*b) : std::nullopt,
                 c ? std::optional<PosetMatrix>(*c) : std::nullopt,
                 i,
                 j,
                 *check.left,
                 *check.right};
    WitnessKey key = key_of(w);
    if (observer_) observer_(report_.law, w);
    if (!report_.witness || key < best_key_) {
      report_.witness = std::move(w);
      best_key_ = std::move(key);
    }
  }

  LawReport finish() {
    report_.passed = report_.failures == 0;
    return std::move(report_);
  }

 private:
  const std::function<void(Law, const LawWitness&)>& observer_;
  LawReport report_;
  WitnessKey best_key_;
};

std::vector<LawReport> exhaustive(const CompositionKind& kind,
                                  const std::vector<PosetMatrix>& pool,
                                  const LawSearch& search) {
  Recorder nested(Law::NestedAssoc, kind, search.on_failure);
  Recorder parallel(Law::ParallelAssoc, kind, search.on_failure);
  Recorder unit(Law::Unit, kind, search.on_failure);
  for (const auto& a : pool) {
    const int n = a.order();
    for (int i = 1; i <= n; ++i) unit.record(check_unit(kind, a, i), a, nullptr, nullptr, i, 0);
    for (const auto& b : pool) {
      for (const auto& c : pool) {
        for (int i = 1; i <= n; ++i) {
          for (int j = 1; j <= b.order(); ++j) {
            nested.record(check_nested(kind, a, b, c, i, j), a, &b, &c, i, j);
          }
          for (int j = i + 1; j <= n; ++j) {
            parallel.record(check_parallel(kind, a, b, c, i, j), a, &b, &c, i,
                            j);
          }
        }
      }
    }
  }
  return {nested.finish(), parallel.finish(), unit.finish()};
}

std::vector<LawReport> sampled(const CompositionKind& kind, int max_order,
                               const LawSearch& search) {
  std::vector<std::vector<PosetMatrix>> pools(max_order + 1);
  for (int n = 1; n <= max_order; ++n) pools[n] = generate_all(n);
  std::mt19937_64 rng(search.seed);
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  auto draw = [&](int min_order) -> const PosetMatrix& {
    const auto& pool = pools[uniform(min_order, max_order)];
    return pool[std::uniform_int_distribution<std::size_t>(
        0, pool.size() - 1)(rng)];
  };
  Recorder nested(Law::NestedAssoc, kind, search.on_failure);
  Recorder parallel(Law::ParallelAssoc, kind, search.on_failure);
  Recorder unit(Law::Unit, kind, search.on_failure);
  for (long t = 0; t < search.trials; ++t) {
    {
      const PosetMatrix& a = draw(1);
      const PosetMatrix& b = draw(1);
      const PosetMatrix& c = draw(1);
      const int i = uniform(1, a.order());
      const int j = uniform(1, b.order());
      nested.record(check_nested(kind, a, b, c, i, j), a, &b, &c, i, j);
    }
    if (max_order >= 2) {
      const PosetMatrix& a = draw(2);
      const PosetMatrix& b = draw(1);
      const PosetMatrix& c = draw(1);
      int i = uniform(1, a.order());
      int j = uniform(1, a.order() - 1);
      if (j >= i) {
        ++j;
      } else {
        std::swap(i, j);
      }
      parallel.record(check_parallel(kind, a, b, c, i, j), a, &b, &c, i, j);
    }
    {
      const PosetMatrix& a = draw(1);
      const int i = uniform(1, a.order());
      unit.record(check_unit(kind, a, i), a, nullptr, nullptr, i, 0);
    }
  }
  return {nested.finish(), parallel.finish(), unit.finish()};
}

}  // namespace

std::vector<LawReport> verify_laws(const CompositionKind& kind, int max_order,
                                   const LawSearch& search) {
  if (max_order < 1) {
    throw IndexOutOfRange("max_order must be at least 1, got " +
                          std::to_string(max_order));
  }
  if (search.mode == LawSearch::Mode::Random) {
    return sampled(kind, max_order, search);
  }
  std::vector<PosetMatrix> pool;
  for (int n = 1; n <= max_order; ++n) {
    for (auto& a : generate_all(n)) pool.push_back(std::move(a));
  }
  return exhaustive(kind, pool, search);
}

}  // namespace posetop
