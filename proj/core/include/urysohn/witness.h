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

// The chain configuration showing that the cover by open balls of radius 1/2
// has no point-finite refinement with finite support.
//
// Given a nonempty support B of diameter D and parameters n, m >= 1, put
// k = n*m and add a chain a_0 < ... < a_{3k} above B with
//   d(a_i, a_j) = |i - j| / k,   d(a_i, b) = D + 4 for every b in B.
// A refinement member O containing a = a_{3k} with N(a, 1/m) inside O is
// represented by its trace on the chain. Shifting O along a_i -> a_{i+1}
// (an automorphism fixing B) n times yields n distinct members that all
// contain a; verify_injection checks this on a given trace and
// exhaust_all_traces checks it on every admissible one.

#ifndef URYSOHN_WITNESS_H_
#define URYSOHN_WITNESS_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "urysohn/limit.h"
#include "urysohn/rational.h"
#include "urysohn/space.h"

namespace urysohn {

struct WitnessConfig {
  FinSpace support;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t k = 0;  // n * m
  std::vector<PointId> chain;  // a_0 ... a_{3k}
  FinSpace space;              // support followed by the chain
  Rat far;                     // diameter(support) + 4

  /// a = a_{3k}.
  PointId apex() const { return chain.back(); }
  std::int64_t last_index() const { return 3 * k; }
};

/// Throws std::invalid_argument for an empty support or n, m < 1, and
/// std::logic_error if the mixed distances break the triangle inequality.
WitnessConfig build_witness(const FinSpace& support, std::int64_t n,
                            std::int64_t m);

/// Fixes the support pointwise and sends a_i to a_{i+1} for i < 3k.
PartialIso shift_iso(const WitnessConfig& w);

/// Chain indices (0..3k) of a refinement member's trace.
struct RefinementTrace {
  std::vector<std::int64_t> members;  // sorted, unique
};

/// Normalizes (sorts, dedups) and range-checks indices against 0..3k.
RefinementTrace make_trace(const WitnessConfig& w,
                           std::vector<std::int64_t> members);

/// 3k is a member, the tail 3k-n+1..3k is contained, and every member lies
/// in the window 2k..3k.
bool admissible(const WitnessConfig& w, const RefinementTrace& t);

/// Least member L; 2k <= L <= 3k-n+1 is asserted (std::logic_error).
/// Throws std::invalid_argument for an inadmissible trace.
std::int64_t min_index(const WitnessConfig& w, const RefinementTrace& t);

enum class Membership { kIn, kOut, kUnknown };

/// Membership of a_i in the j-th shift of the member, decided by pulling
/// back: a_i is in it iff a_{i-j} is a member. Indices i < j pull back off
/// the chain and stay kUnknown. Requires 0 <= j < n.
std::vector<Membership> shifted_trace(const WitnessConfig& w,
                                      const RefinementTrace& t,
                                      std::int64_t j);

struct ShiftCheck {
  std::int64_t j = 0;
  std::vector<Membership> trace;
  /// Indices in k..L+j that belong to the shifted member.
  std::vector<std::int64_t> pattern;
  bool apex_in = false;     // a_{3k} belongs to the shifted member
  bool determined = false;  // no kUnknown among the queried indices
  bool pattern_ok = false;  // pattern == {L + j}
};

struct InjectionReport {
  std::int64_t min_index = 0;
  bool min_index_in_range = false;
  std::vector<ShiftCheck> shifts;
  bool pairwise_distinct = false;
  bool injective = false;
};

/// Throws std::invalid_argument for an inadmissible trace.
InjectionReport verify_injection(const WitnessConfig& w,
                                 const RefinementTrace& t);

struct ExhaustSummary {
  std::size_t checked = 0;
  std::size_t passed = 0;
  /// Every trace had 2k <= L <= 3k-n+1 and every pattern identity held.
  bool bounds_held = true;
  bool all_passed() const { return checked == passed && bounds_held; }
};

/// Runs verify_injection on all 2^(k+1-n) admissible traces.
ExhaustSummary exhaust_all_traces(const WitnessConfig& w);

}  // namespace urysohn

#endif  // URYSOHN_WITNESS_H_
