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

#include "urysohn/witness.h"

#include <gtest/gtest.h>

#include "test_support.h"
#include "urysohn/symmetry.h"

namespace urysohn {
namespace {

using testing::P;
using testing::singleton;
using M = Membership;

// --- build_witness ----------------------------------------------------------

TEST(BuildWitnessTest, UnitConfigOverSingleton) {
  const WitnessConfig w = build_witness(singleton(), 1, 1);
  EXPECT_EQ(w.k, 1);
  EXPECT_EQ(w.far, Rat(4));
  ASSERT_EQ(w.chain.size(), 4u);
  EXPECT_EQ(w.space.distance(w.chain[0], w.chain[3]), Rat(3));
  for (PointId a : w.chain) EXPECT_EQ(w.space.distance(a, P(0)), Rat(4));
  EXPECT_EQ(w.space.points().front(), P(0));
  EXPECT_EQ(w.apex(), w.chain.back());
}

TEST(BuildWitnessTest, HalfStepsOverAPair) {
  const WitnessConfig w = build_witness(testing::pair_at(2), 2, 1);
  EXPECT_EQ(w.k, 2);
  EXPECT_EQ(w.far, Rat(6));
  ASSERT_EQ(w.chain.size(), 7u);
  for (std::size_t i = 0; i + 1 < w.chain.size(); ++i) {
    EXPECT_EQ(w.space.distance(w.chain[i], w.chain[i + 1]), Rat(1, 2));
  }
  EXPECT_TRUE(testing::metric_axioms_hold(w.space));
}

TEST(BuildWitnessTest, ShapeForSmallParameters) {
  for (std::size_t bsize : {1, 2, 3}) {
    const FinSpace b = testing::chain(1, static_cast<std::int64_t>(bsize));
    for (std::int64_t n = 1; n <= 3; ++n) {
      for (std::int64_t m = 1; m <= 3; ++m) {
        const WitnessConfig w = build_witness(b, n, m);
        ASSERT_EQ(w.k, n * m);
        ASSERT_EQ(static_cast<std::int64_t>(w.chain.size()), 3 * w.k + 1);
        EXPECT_TRUE(testing::metric_axioms_hold(w.space));
        const auto& order = w.space.points();
        for (std::size_t i = 0; i < bsize; ++i) EXPECT_EQ(order[i], b.point(i));
        for (std::size_t i = 0; i < w.chain.size(); ++i) {
          EXPECT_EQ(order[bsize + i], w.chain[i]);
          for (std::size_t j = 0; j < w.chain.size(); ++j) {
            const auto gap = static_cast<std::int64_t>(i > j ? i - j : j - i);
            EXPECT_EQ(w.space.distance(w.chain[i], w.chain[j]), Rat(gap, w.k));
          }
          for (PointId x : b.points()) {
            EXPECT_EQ(w.space.distance(w.chain[i], x),
                      Rat(static_cast<std::int64_t>(bsize) - 1 + 4));
          }
        }
      }
    }
  }
}

TEST(BuildWitnessTest, Errors) {
  EXPECT_THROW(build_witness(singleton(), 0, 1), std::invalid_argument);
  EXPECT_THROW(build_witness(singleton(), 1, 0), std::invalid_argument);
  EXPECT_THROW(build_witness(FinSpace{}, 1, 1), std::invalid_argument);
}

// The open ball of radius 1/m about the apex meets the chain exactly in the
// last n points: (3k - i) / k < 1/m iff i > 3k - n.
TEST(BuildWitnessTest, TailBall) {
  for (std::int64_t n = 1; n <= 4; ++n) {
    for (std::int64_t m = 1; m <= 4; ++m) {
      const WitnessConfig w = build_witness(testing::pair_at(1), n, m);
      std::vector<PointId> want;
      for (std::int64_t i = 0; i <= 3 * w.k; ++i) {
        if ((3 * w.k - i) * m < w.k) want.push_back(w.chain[i]);
      }
      ASSERT_EQ(static_cast<std::int64_t>(want.size()), n);
      EXPECT_EQ(want.front(), w.chain[3 * w.k - n + 1]);
      EXPECT_EQ(ball_trace(w.space, w.apex(), Rat(1, m)), want);
    }
  }
}

// --- shift ------------------------------------------------------------------

TEST(ShiftIsoTest, UnitConfig) {
  const WitnessConfig w = build_witness(singleton(), 1, 1);
  const PartialIso s = shift_iso(w);
  EXPECT_EQ(s.dom, (std::vector<PointId>{P(0), w.chain[0], w.chain[1], w.chain[2]}));
  EXPECT_EQ(s.cod, (std::vector<PointId>{P(0), w.chain[1], w.chain[2], w.chain[3]}));
  EXPECT_TRUE(is_partial_iso(w.space, s));
  EXPECT_EQ(s.image(*s.image(w.chain[0])), w.chain[2]);
}

TEST(ShiftIsoTest, ChainTuplesAreConjugate) {
  for (std::int64_t n = 1; n <= 3; ++n) {
    const WitnessConfig w = build_witness(testing::pair_at(2), n, 2);
    EXPECT_TRUE(is_partial_iso(w.space, shift_iso(w)));
    const Tuple lo(w.chain.begin(), w.chain.end() - 1);
    const Tuple hi(w.chain.begin() + 1, w.chain.end());
    EXPECT_TRUE(same_fix_orbit(w.space, Support{w.support.points()}, lo, hi));
  }
}

// --- traces -----------------------------------------------------------------

// Admissibility straight from its three conditions.
bool admissible_oracle(std::int64_t k, std::int64_t n, std::uint64_t mask) {
  const std::int64_t top = 3 * k;
  auto has = [&](std::int64_t i) { return (mask >> i) & 1u; };
  for (std::int64_t i = top - n + 1; i <= top; ++i) {
    if (!has(i)) return false;
  }
  for (std::int64_t i = 0; i < 2 * k; ++i) {
    if (has(i)) return false;
  }
  return has(top);
}

std::vector<std::int64_t> members_of(std::uint64_t mask, std::int64_t top) {
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i <= top; ++i) {
    if ((mask >> i) & 1u) out.push_back(i);
  }
  return out;
}

TEST(TraceTest, AdmissibleExamples) {
  const WitnessConfig w = build_witness(singleton(), 2, 1);
  EXPECT_TRUE(admissible(w, make_trace(w, {5, 6})));
  EXPECT_TRUE(admissible(w, make_trace(w, {6, 4, 5, 5})));
  EXPECT_FALSE(admissible(w, make_trace(w, {6})));
  EXPECT_FALSE(admissible(w, make_trace(w, {3, 5, 6})));
  EXPECT_THROW(make_trace(w, {7}), std::out_of_range);
  EXPECT_THROW(make_trace(w, {-1}), std::out_of_range);
}

TEST(TraceTest, MinIndexExamples) {
  const WitnessConfig w = build_witness(singleton(), 2, 1);
  EXPECT_EQ(min_index(w, make_trace(w, {5, 6})), 5);
  EXPECT_EQ(min_index(w, make_trace(w, {4, 5, 6})), 4);
  const WitnessConfig w4 = build_witness(singleton(), 2, 2);
  EXPECT_EQ(min_index(w4, make_trace(w4, {8, 9, 10, 11, 12})), 8);
  EXPECT_THROW(min_index(w, make_trace(w, {6})), std::invalid_argument);
}

TEST(TraceTest, ShiftedTraceExamples) {
  const WitnessConfig w = build_witness(singleton(), 2, 1);
  const RefinementTrace t = make_trace(w, {5, 6});
  EXPECT_EQ(shifted_trace(w, t, 0),
            (std::vector<M>{M::kOut, M::kOut, M::kOut, M::kOut, M::kOut,
                            M::kIn, M::kIn}));
  EXPECT_EQ(shifted_trace(w, t, 1),
            (std::vector<M>{M::kUnknown, M::kOut, M::kOut, M::kOut, M::kOut,
                            M::kOut, M::kIn}));
  EXPECT_THROW(shifted_trace(w, t, 2), std::out_of_range);
  EXPECT_THROW(shifted_trace(w, t, -1), std::out_of_range);
}

TEST(VerifyInjectionTest, Examples) {
  const WitnessConfig w = build_witness(singleton(), 2, 1);
  const InjectionReport a = verify_injection(w, make_trace(w, {5, 6}));
  EXPECT_EQ(a.min_index, 5);
  ASSERT_EQ(a.shifts.size(), 2u);
  EXPECT_EQ(a.shifts[0].pattern, std::vector<std::int64_t>{5});
  EXPECT_EQ(a.shifts[1].pattern, std::vector<std::int64_t>{6});
  EXPECT_TRUE(a.injective);

  const InjectionReport b = verify_injection(w, make_trace(w, {4, 5, 6}));
  EXPECT_EQ(b.min_index, 4);
  EXPECT_EQ(b.shifts[0].pattern, std::vector<std::int64_t>{4});
  EXPECT_EQ(b.shifts[1].pattern, std::vector<std::int64_t>{5});
  EXPECT_TRUE(b.injective);

  const WitnessConfig w1 = build_witness(singleton(), 1, 3);
  const InjectionReport c = verify_injection(w1, make_trace(w1, {7, 9}));
  ASSERT_EQ(c.shifts.size(), 1u);
  EXPECT_EQ(c.shifts[0].pattern, std::vector<std::int64_t>{7});
  EXPECT_TRUE(c.injective);

  EXPECT_THROW(verify_injection(w, make_trace(w, {6})), std::invalid_argument);
}

// Every subset of 0..3k, filtered by the oracle, checked against the
// pull-back rule computed here.
TEST(ExhaustTest, MatchesBruteForceOverAllSubsets) {
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (std::int64_t m = 1; m <= 2; ++m) {
      const WitnessConfig w = build_witness(singleton(), n, m);
      const std::int64_t k = w.k, top = 3 * k;
      std::size_t count = 0;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (top + 1)); ++mask) {
        const RefinementTrace t = make_trace(w, members_of(mask, top));
        const bool adm = admissible_oracle(k, n, mask);
        ASSERT_EQ(admissible(w, t), adm);
        if (!adm) continue;
        ++count;
        const InjectionReport r = verify_injection(w, t);
        ASSERT_TRUE(r.injective) << "n=" << n << " m=" << m << " mask=" << mask;
        std::int64_t least = 0;
        while (!((mask >> least) & 1u)) ++least;
        EXPECT_EQ(r.min_index, least);
        EXPECT_GE(least, 2 * k);
        EXPECT_LE(least, top - n + 1);
        for (std::int64_t j = 0; j < n; ++j) {
          std::vector<std::int64_t> pattern;
          for (std::int64_t i = k; i <= least + j; ++i) {
            if ((mask >> (i - j)) & 1u) pattern.push_back(i);
          }
          EXPECT_EQ(pattern, std::vector<std::int64_t>{least + j});
          EXPECT_EQ(r.shifts[j].pattern, pattern);
          EXPECT_TRUE((mask >> (top - j)) & 1u);
        }
      }
      EXPECT_EQ(count, std::size_t{1} << (k + 1 - n));
      const ExhaustSummary s = exhaust_all_traces(w);
      EXPECT_EQ(s.checked, count);
      EXPECT_EQ(s.passed, count);
      EXPECT_TRUE(s.all_passed());
    }
  }
}

TEST(ExhaustTest, CountExamples) {
  EXPECT_EQ(exhaust_all_traces(build_witness(singleton(), 1, 1)).checked, 2u);
  EXPECT_EQ(exhaust_all_traces(build_witness(singleton(), 2, 1)).checked, 2u);
  EXPECT_EQ(exhaust_all_traces(build_witness(singleton(), 2, 2)).checked, 8u);
}

}  // namespace
}  // namespace urysohn
