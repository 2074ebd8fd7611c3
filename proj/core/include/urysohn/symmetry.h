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

// Orbits of tuples under the pointwise stabilizer of a finite support.
//
// In an ultrahomogeneous structure two tuples are conjugate by an
// automorphism fixing B pointwise exactly when the map that fixes B and
// sends one tuple to the other is a partial isomorphism, so orbit questions
// reduce to a finite check on the stage.

#ifndef URYSOHN_SYMMETRY_H_
#define URYSOHN_SYMMETRY_H_

#include <optional>
#include <span>
#include <vector>

#include "urysohn/limit.h"
#include "urysohn/space.h"

namespace urysohn {

/// Finite set of points held fixed.
struct Support {
  std::vector<PointId> points;
};

using Tuple = std::vector<PointId>;

/// The map fixing the support and sending t1[i] to t2[i], when it is a
/// partial isomorphism of the stage. Duplicate pairs are merged.
/// Throws std::invalid_argument on a length mismatch and std::out_of_range
/// for points outside the stage.
std::optional<PartialIso> fix_orbit_witness(const FinSpace& stage,
                                            const Support& support,
                                            std::span<const PointId> t1,
                                            std::span<const PointId> t2);

bool same_fix_orbit(const FinSpace& stage, const Support& support,
                    std::span<const PointId> t1, std::span<const PointId> t2);

/// Every tuple of the stage in the same orbit as t, ordered lexicographically
/// by stage positions. Always contains t.
std::vector<Tuple> orbit_traces(const FinSpace& stage, const Support& support,
                                std::span<const PointId> t);

}  // namespace urysohn

#endif  // URYSOHN_SYMMETRY_H_
