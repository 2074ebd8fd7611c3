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

// One-point extensions, strong amalgamation, and a bounded exhaustive check
// of the hereditary, joint embedding and amalgamation properties.

#ifndef URYSOHN_AMALGAM_H_
#define URYSOHN_AMALGAM_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "urysohn/rational.h"
#include "urysohn/space.h"

namespace urysohn {

/// Distance from a prospective new point to each base point.
using DistanceVector = std::map<PointId, Rat>;

/// A one-point extension of some base space: the distances of the new point
/// and the gap of the base order it occupies (0 = below everything,
/// base.size() = above everything).
struct ExtensionType {
  DistanceVector distances;
  std::size_t slot = 0;

  friend bool operator==(const ExtensionType&, const ExtensionType&) = default;
};

/// Raised when a distance vector cannot be realized. pair() names the two
/// base points whose constraint fails (both equal for a non-positive entry).
class InfeasibleExtension : public std::invalid_argument {
 public:
  InfeasibleExtension(PointId x, PointId y, const std::string& what);
  std::pair<PointId, PointId> pair() const { return pair_; }

 private:
  std::pair<PointId, PointId> pair_;
};

/// True iff every entry is positive and, for all base points x, y,
/// |d(x) - d(y)| <= d(x, y) <= d(x) + d(y). Throws std::invalid_argument if
/// dvec misses a base point or names a point outside the base.
bool extension_feasible(const FinSpace& base, const DistanceVector& dvec);

/// Same check, reporting the first failing pair instead of a bool.
std::optional<std::pair<PointId, PointId>> first_infeasible_pair(
    const FinSpace& base, const DistanceVector& dvec);

/// Adds one point realizing `ext`. The new point gets `new_id` or, by
/// default, base.next_id(). Throws InfeasibleExtension.
FinSpace extend_one_point(const FinSpace& base, const ExtensionType& ext,
                          std::optional<PointId> new_id = std::nullopt);

struct Amalgam {
  FinSpace space;
  Embedding from_a;
  Embedding from_b;
};

/// Strong amalgam of a and b over c.
///
/// Points of a keep their ids; points of b outside the image of c receive
/// fresh ids starting at a.next_id(), in b's order. Cross distances are the
/// shortest-path completion through c, or 1 + max(diam a, diam b) when c is
/// empty. Within each gap between consecutive c-points, a-side points
/// precede b-side points.
///
/// Throws std::invalid_argument if either embedding is not structure
/// preserving.
Amalgam amalgamate(const FinSpace& a, const FinSpace& b, const FinSpace& c,
                   const Embedding& c_to_a, const Embedding& c_to_b);

struct FraisseReport {
  std::size_t max_size = 0;
  std::vector<Rat> grid;

  /// Structures per size (index = size), counted up to isomorphism.
  std::vector<std::size_t> structures_by_size;
  std::size_t hp_checked = 0;
  std::size_t jep_checked = 0;
  std::size_t ap_checked = 0;

  std::optional<std::string> hp_counterexample;
  std::optional<std::string> jep_counterexample;
  std::optional<std::string> ap_counterexample;

  bool hp_holds() const { return !hp_counterexample; }
  bool jep_holds() const { return !jep_counterexample; }
  bool ap_holds() const { return !ap_counterexample; }
  bool all_hold() const { return hp_holds() && jep_holds() && ap_holds(); }
};

/// Every valid space with 1..max_size points whose distances lie in `grid`.
/// Spaces use PointIds 0..size-1 in order; one representative per
/// isomorphism class.
std::vector<FinSpace> enumerate_grid_spaces(std::size_t max_size,
                                            std::span<const Rat> grid);

/// Exhaustive HP/JEP/AP check on the grid slice. Every amalgam is
/// re-validated and both of its embeddings are checked. Throws
/// std::invalid_argument for max_size < 2 or a non-positive grid value.
FraisseReport check_fraisse_properties(std::size_t max_size,
                                       std::span<const Rat> grid);

}  // namespace urysohn

#endif  // URYSOHN_AMALGAM_H_
