// Copyright 2026 The Urysohn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "urysohn/amalgam.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "test_support.h"

namespace urysohn {
namespace {

using testing::make_space;
using testing::P;
using testing::pair_at;
using testing::singleton;

DistanceVector dvec(const FinSpace& base, const std::vector<Rat>& values) {
  DistanceVector out;
  for (std::size_t i = 0; i < base.size(); ++i) out[base.point(i)] = values.at(i);
  return out;
}

// Candidate one-point extension written out directly: base points in order
// with the new point (id `fresh`) spliced in at `slot`.
SpaceTable candidate_table(const FinSpace& base, const DistanceVector& d,
                           std::size_t slot, PointId fresh) {
  std::vector<PointId> pts = base.points();
  pts.insert(pts.begin() + static_cast<std::ptrdiff_t>(slot), fresh);
  SpaceTable t(pts);
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i + 1; j < base.size(); ++j) {
      t.set(base.point(i), base.point(j), base.distance_at(i, j));
    }
    t.set(base.point(i), fresh, d.at(base.point(i)));
  }
  return t;
}

// --- extension_feasible / extend_one_point ----------------------------------

TEST(ExtensionTest, FeasibilityExamples) {
  const FinSpace unit = pair_at(1);
  EXPECT_TRUE(extension_feasible(unit, dvec(unit, {Rat(1, 2), Rat(1, 2)})));
  EXPECT_FALSE(extension_feasible(unit, dvec(unit, {Rat(1, 4), Rat(1, 4)})));
  EXPECT_TRUE(extension_feasible(unit, dvec(unit, {Rat(1, 2), Rat(3, 2)})));
  EXPECT_FALSE(extension_feasible(unit, dvec(unit, {Rat(1, 2), Rat(2)})));
  EXPECT_FALSE(extension_feasible(unit, dvec(unit, {Rat(0), Rat(1)})));
}

TEST(ExtensionTest, DvecMustCoverBaseExactly) {
  const FinSpace unit = pair_at(1);
  EXPECT_THROW(extension_feasible(unit, DistanceVector{{P(0), 1}}),
               std::invalid_argument);
  EXPECT_THROW(
      extension_feasible(unit, DistanceVector{{P(0), 1}, {P(1), 1}, {P(5), 1}}),
      std::invalid_argument);
}

TEST(ExtensionTest, SingletonPlusOne) {
  const FinSpace s = extend_one_point(singleton(), {dvec(singleton(), {1}), 1});
  EXPECT_EQ(s.points(), (std::vector<PointId>{P(0), P(1)}));
  EXPECT_EQ(s.distance(P(0), P(1)), Rat(1));
}

TEST(ExtensionTest, MidpointIsAValidPath) {
  const FinSpace unit = pair_at(1);
  const FinSpace s =
      extend_one_point(unit, {dvec(unit, {Rat(1, 2), Rat(1, 2)}), 1}, P(9));
  EXPECT_EQ(s.points(), (std::vector<PointId>{P(0), P(9), P(1)}));
  EXPECT_TRUE(testing::metric_axioms_hold(s));
  EXPECT_EQ(s.distance(P(9), P(1)), Rat(1, 2));
}

TEST(ExtensionTest, InfeasibleNamesThePair) {
  const FinSpace unit = pair_at(1);
  try {
    extend_one_point(unit, {dvec(unit, {Rat(1, 4), Rat(1, 4)}), 0});
    FAIL() << "expected InfeasibleExtension";
  } catch (const InfeasibleExtension& e) {
    EXPECT_EQ(e.pair(), std::make_pair(P(0), P(1)));
  }
  EXPECT_THROW(extend_one_point(unit, {dvec(unit, {1, 1}), 3}),
               std::invalid_argument);
  EXPECT_THROW(extend_one_point(unit, {dvec(unit, {1, 1}), 0}, P(1)),
               std::invalid_argument);
}

// The closed-form test agrees with building the table and validating it, on
// every base of size <= 3 over a small grid.
TEST(ExtensionPropertyTest, FeasibleIffCandidateValidates) {
  const std::vector<Rat> grid{Rat(1, 2), 1, 2};
  std::size_t agree = 0;
  for (const FinSpace& base : enumerate_grid_spaces(3, grid)) {
    std::vector<std::size_t> digit(base.size(), 0);
    for (;;) {
      std::vector<Rat> values;
      for (std::size_t d : digit) values.push_back(grid[d]);
      const DistanceVector d = dvec(base, values);
      const bool feasible = extension_feasible(base, d);
      for (std::size_t slot = 0; slot <= base.size(); ++slot) {
        const SpaceTable t = candidate_table(base, d, slot, base.next_id());
        ASSERT_EQ(feasible, validate(t).valid());
        if (feasible) {
          const FinSpace s = extend_one_point(base, {d, slot});
          EXPECT_EQ(s, FinSpace::from_table(t));
        } else {
          EXPECT_THROW(extend_one_point(base, {d, slot}), InfeasibleExtension);
        }
        ++agree;
      }
      std::size_t i = 0;
      while (i < digit.size() && ++digit[i] == grid.size()) digit[i++] = 0;
      if (i == digit.size()) break;
    }
  }
  EXPECT_GT(agree, 0u);
}

// --- amalgamate -------------------------------------------------------------

TEST(AmalgamateTest, CrossDistanceIsLargestFeasible) {
  // a = {z < p}, b = {z < q}, c = {z}.
  const FinSpace a = pair_at(1);
  const FinSpace b = pair_at(2);
  const FinSpace c = singleton();
  const Embedding into{c.points(), {P(0)}};
  const Amalgam m = amalgamate(a, b, c, into, into);
  const PointId p = m.from_a(P(1));
  const PointId q = m.from_b(P(1));
  const Rat got = m.space.distance(p, q);
  EXPECT_EQ(got, Rat(3));

  // Oracle: feasible values for d(p, q), scanning the quarter grid on [0, 5].
  std::vector<Rat> feasible;
  for (std::int64_t i = 1; i <= 20; ++i) {
    if (extension_feasible(a, DistanceVector{{P(0), 2}, {P(1), Rat(i, 4)}})) {
      feasible.push_back(Rat(i, 4));
    }
  }
  ASSERT_FALSE(feasible.empty());
  EXPECT_EQ(feasible.front(), Rat(1));
  EXPECT_EQ(feasible.back(), Rat(3));
  EXPECT_TRUE(feasible.front() <= got && got <= feasible.back());
}

TEST(AmalgamateTest, OverAllOfBGivesA) {
  const FinSpace a = testing::chain(1, 4);
  const FinSpace b = pair_at(1);
  const Embedding b_in_a{b.points(), {P(1), P(2)}};
  const Embedding id{b.points(), b.points()};
  const Amalgam m = amalgamate(a, b, b, b_in_a, id);
  EXPECT_TRUE(canonical_iso(m.space, a).has_value());
  EXPECT_EQ(m.from_b.target, b_in_a.target);
}

TEST(AmalgamateTest, SelfOverSelfIsIdentity) {
  const FinSpace a = testing::chain(2, 5);
  const Embedding id{a.points(), a.points()};
  const Amalgam m = amalgamate(a, a, a, id, id);
  EXPECT_EQ(m.space, a);
}

TEST(AmalgamateTest, EmptyOverlapUsesDiameterConstant) {
  const FinSpace a = pair_at(2);
  const FinSpace b = pair_at(Rat(1, 2));
  const Amalgam m = amalgamate(a, b, FinSpace{}, Embedding{}, Embedding{});
  ASSERT_EQ(m.space.size(), 4u);
  for (PointId x : m.from_a.target) {
    for (PointId y : m.from_b.target) EXPECT_EQ(m.space.distance(x, y), Rat(3));
  }
  // a-side first in the single gap; b gets fresh ids from a.next_id().
  EXPECT_EQ(m.space.points(), (std::vector<PointId>{P(0), P(1), P(2), P(3)}));
}

TEST(AmalgamateTest, OrderInterleavesByGap) {
  // c = {z}; a = {p < z}, b = {q < z, r > z}.
  const FinSpace a = pair_at(1);
  const FinSpace b = make_space({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  const FinSpace c = singleton();
  const Amalgam m = amalgamate(a, b, c, Embedding{c.points(), {P(1)}},
                               Embedding{c.points(), {P(1)}});
  // a keeps ids 0 (p), 1 (z); q -> 2, r -> 3.
  EXPECT_EQ(m.space.points(), (std::vector<PointId>{P(0), P(2), P(1), P(3)}));
  EXPECT_EQ(m.space.distance(P(0), P(2)), Rat(2));
  EXPECT_EQ(m.space.distance(P(0), P(3)), Rat(2));
}

TEST(AmalgamateTest, RejectsBadEmbeddings) {
  const FinSpace a = pair_at(1);
  const FinSpace c = pair_at(2);
  const Embedding bad{c.points(), a.points()};
  const Embedding ok{c.points(), c.points()};
  EXPECT_THROW(amalgamate(a, c, c, bad, ok), std::invalid_argument);
}

// Invariants on random spans over random overlaps.
TEST(AmalgamatePropertyTest, RandomSpans) {
  std::mt19937 rng(19);
  const std::vector<Rat> grid{1, 2, 3};
  std::size_t runs = 0;
  for (int iter = 0; iter < 400 && runs < 150; ++iter) {
    const FinSpace c = testing::random_space(rng, 1 + iter % 2, grid);
    const FinSpace a = testing::random_space(rng, 2 + iter % 3, grid);
    const FinSpace b = testing::random_space(rng, 2 + (iter / 3) % 3, grid);
    const auto ea = enumerate_embeddings(c, a);
    const auto eb = enumerate_embeddings(c, b);
    if (ea.empty() || eb.empty()) continue;
    ++runs;
    const Amalgam m = amalgamate(a, b, c, ea.back(), eb.front());
    EXPECT_TRUE(testing::metric_axioms_hold(m.space));
    EXPECT_TRUE(is_embedding(a, m.space, m.from_a));
    EXPECT_TRUE(is_embedding(b, m.space, m.from_b));
    for (PointId z : c.points()) {
      EXPECT_EQ(m.from_a(ea.back()(z)), m.from_b(eb.front()(z)));
    }
    std::set<PointId> ia(m.from_a.target.begin(), m.from_a.target.end());
    std::size_t shared = 0;
    for (PointId y : m.from_b.target) shared += ia.count(y);
    EXPECT_EQ(shared, c.size());
    EXPECT_EQ(m.space.size(), a.size() + b.size() - c.size());
  }
  EXPECT_GT(runs, 50u);
}

// --- Fraisse slice ----------------------------------------------------------

// Brute-force count of ordered spaces on n points with grid distances. An
// order-preserving isomorphism between ordered spaces is the identity on
// positions, so classes are just valid upper triangles.
std::size_t count_grid_spaces(std::size_t n, const std::vector<Rat>& grid) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::size_t total = 1;
  for (std::size_t i = 0; i < pairs; ++i) total *= grid.size();
  std::size_t count = 0;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n));
    std::size_t rest = code;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        d[i][j] = d[j][i] = grid[rest % grid.size()];
        rest /= grid.size();
      }
    }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        for (std::size_t k = 0; k < n && ok; ++k) {
          ok = d[i][k] <= d[i][j] + d[j][k];
        }
      }
    }
    count += ok;
  }
  return count;
}

TEST(FraisseTest, EquidistantSlice) {
  const std::vector<Rat> grid{1};
  const FraisseReport r = check_fraisse_properties(3, grid);
  EXPECT_TRUE(r.all_hold());
  EXPECT_EQ(r.structures_by_size, (std::vector<std::size_t>{0, 1, 1, 1}));
  EXPECT_EQ(r.hp_checked, 1u + 3u + 7u);
  EXPECT_EQ(r.jep_checked, 9u);
}

TEST(FraisseTest, CountsMatchBruteForce) {
  for (const std::vector<Rat>& grid :
       {std::vector<Rat>{1, 2}, std::vector<Rat>{1, 3}, std::vector<Rat>{1, 2, 3}}) {
    const std::size_t max_size = grid.size() == 3 ? 3 : 4;
    const FraisseReport r = check_fraisse_properties(max_size, grid);
    EXPECT_TRUE(r.all_hold());
    ASSERT_EQ(r.structures_by_size.size(), max_size + 1);
    std::size_t total = 0, hp = 0;
    for (std::size_t n = 1; n <= max_size; ++n) {
      EXPECT_EQ(r.structures_by_size[n], count_grid_spaces(n, grid)) << n;
      total += r.structures_by_size[n];
      hp += r.structures_by_size[n] * ((std::size_t{1} << n) - 1);
    }
    EXPECT_EQ(r.hp_checked, hp);
    EXPECT_EQ(r.jep_checked, total * total);
  }
}

TEST(FraisseTest, TwoPointSliceCountsSpans) {
  const std::vector<Rat> grid{1, 3};
  const FraisseReport r = check_fraisse_properties(2, grid);
  EXPECT_TRUE(r.all_hold());
  EXPECT_EQ(r.structures_by_size, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(r.hp_checked, 1u + 3u + 3u);
  EXPECT_EQ(r.jep_checked, 9u);
  // c = point: spans into point (1), pair1 (2), pair3 (2) -> 5^2.
  // c = pair: only into itself -> 1 each.
  EXPECT_EQ(r.ap_checked, 25u + 1u + 1u);
}

TEST(FraisseTest, RejectsBadBounds) {
  const std::vector<Rat> bad{1, 0};
  const std::vector<Rat> good{1};
  EXPECT_THROW(check_fraisse_properties(3, bad), std::invalid_argument);
  EXPECT_THROW(check_fraisse_properties(1, good), std::invalid_argument);
}

}  // namespace
}  // namespace urysohn
