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

// Finite stages of the countable ultrahomogeneous ordered rational metric
// space, built by a fair schedule of one-point extension tasks, plus the
// back-and-forth engine that extends partial isomorphisms inside a stage.
//
// Schedule. Tasks are triples (subset S, distance vector over S, order slot)
// with distances drawn from the Calkin-Wilf enumeration. They are produced
// in levels: level L covers subsets of the first P_L points (creation order)
// and distances among the first R_L rationals, and emits exactly the
// feasible tasks not covered by level L-1. R grows by one per level, P by
// one per level while the stage has points to spare. Inside a level tasks
// come out by subset size, then lexicographic subset, then distance vector
// (lexicographic on rational indices), then slot. The queue is FIFO and is
// materialized lazily, so every task is eventually dequeued.

#ifndef URYSOHN_LIMIT_H_
#define URYSOHN_LIMIT_H_

#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "urysohn/amalgam.h"
#include "urysohn/rational.h"
#include "urysohn/space.h"

namespace urysohn {

/// Finite partial map dom[i] -> cod[i] between points of one stage.
struct PartialIso {
  std::vector<PointId> dom;
  std::vector<PointId> cod;

  std::size_t size() const { return dom.size(); }
  std::optional<PointId> image(PointId x) const;
  std::optional<PointId> preimage(PointId y) const;
  PartialIso inverse() const { return PartialIso{cod, dom}; }

  friend bool operator==(const PartialIso&, const PartialIso&) = default;
};

/// True iff p is a well-defined bijection between points of `stage` that
/// preserves distances exactly and preserves the strict order.
bool is_partial_iso(const FinSpace& stage, const PartialIso& p);

struct ExtensionTask {
  std::vector<PointId> subset;  // in stage order
  ExtensionType ext;
};

class LimitBuilder {
 public:
  /// Throws InvalidSpace if the seed is not valid. The seed may be empty.
  explicit LimitBuilder(FinSpace seed);

  const FinSpace& stage() const { return stage_; }

  /// Points in creation order (seed points by id, then realized points).
  const std::vector<PointId>& creation_order() const { return created_; }

  /// Dequeues and realizes `steps` tasks; the stage gains `steps` points.
  void grow(std::size_t steps);

  /// Adds a point whose distances to `sub` and order slot relative to `sub`
  /// are exactly `ext`; distances to the rest of the stage come from
  /// amalgamating the stage with sub + new point over sub.
  /// Throws InfeasibleExtension or std::out_of_range for unknown points.
  PointId realize(std::span<const PointId> sub, const ExtensionType& ext);

  /// The task the next grow step would realize.
  const ExtensionTask& peek_task();

  /// Every task over the first covered_points() created points with
  /// distances among the first covered_rationals() Calkin-Wilf terms has
  /// been realized.
  std::size_t covered_points() const { return covered_points_; }
  std::size_t covered_rationals() const { return covered_rationals_; }
  /// Number of levels started so far.
  std::size_t level() const { return level_; }

  /// The index-th positive rational of the schedule.
  const Rat& rational(std::size_t index) { return rationals_.at(index); }

 private:
  void fill_queue();
  void start_level();
  // Task at the cursor if it is new to this level and feasible.
  std::optional<ExtensionTask> cursor_task();
  // Moves the cursor on; false once the level is exhausted.
  bool step_cursor();

  FinSpace stage_;
  std::vector<PointId> created_;
  RationalEnumeration rationals_;
  std::deque<ExtensionTask> queue_;

  std::size_t level_ = 0;
  std::size_t prev_points_ = 0;
  std::size_t prev_rationals_ = 0;
  std::size_t level_points_ = 0;
  std::size_t level_rationals_ = 0;
  std::size_t covered_points_ = 0;
  std::size_t covered_rationals_ = 0;

  // Cursor within the current level: subset (indices into created_), one
  // rational index per subset point, and the order slot.
  std::vector<std::size_t> subset_;
  std::vector<std::size_t> digits_;
  std::size_t slot_ = 0;
  bool cursor_live_ = false;
};

enum class Side { kForth, kBack };

/// Extends p so that `target` lies in its domain (forth) or codomain (back).
/// The partner point is the first stage point in creation order that has
/// the transported type; if none exists, one is realized. Throws
/// std::invalid_argument if p is not a partial isomorphism of the stage.
PartialIso back_and_forth_extend(LimitBuilder& builder, const PartialIso& p,
                                 PointId target, Side side);

class FuelExhausted : public std::runtime_error {
 public:
  explicit FuelExhausted(std::size_t fuel);
};

struct AutoImage {
  PointId image;
  /// p extended by every back-and-forth step that was run.
  PartialIso extension;
  std::size_t steps = 0;
};

/// Image of x under the automorphism extending p that the schedule pins
/// down: step s extends forth at the least-id point outside the domain when
/// s is even and back at the least-id point outside the codomain when s is
/// odd. Runs at most `fuel` steps and throws FuelExhausted ("needs more
/// fuel") if x has not entered the domain by then.
AutoImage apply_auto(LimitBuilder& builder, const PartialIso& p, PointId x,
                     std::size_t fuel);

}  // namespace urysohn

#endif  // URYSOHN_LIMIT_H_
