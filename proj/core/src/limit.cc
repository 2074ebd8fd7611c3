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

#include "urysohn/limit.h"

#include <algorithm>
#include <string>

namespace urysohn {

// --- PartialIso ------------------------------------------------------------

std::optional<PointId> PartialIso::image(PointId x) const {
  for (std::size_t i = 0; i < dom.size(); ++i) {
    if (dom[i] == x) return cod[i];
  }
  return std::nullopt;
}

std::optional<PointId> PartialIso::preimage(PointId y) const {
  for (std::size_t i = 0; i < cod.size(); ++i) {
    if (cod[i] == y) return dom[i];
  }
  return std::nullopt;
}

bool is_partial_iso(const FinSpace& stage, const PartialIso& p) {
  if (p.dom.size() != p.cod.size()) return false;
  const std::size_t n = p.size();
  std::vector<std::size_t> from(n);
  std::vector<std::size_t> to(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto a = stage.position(p.dom[i]);
    auto b = stage.position(p.cod[i]);
    if (!a || !b) return false;
    from[i] = *a;
    to[i] = *b;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Equal positions on one side must be equal on the other; this covers
      // well-definedness and injectivity together with the order test.
      if ((from[i] < from[j]) != (to[i] < to[j])) return false;
      if ((from[i] == from[j]) != (to[i] == to[j])) return false;
      if (stage.distance_at(from[i], from[j]) !=
          stage.distance_at(to[i], to[j])) {
        return false;
      }
    }
  }
  return true;
}

// --- LimitBuilder ----------------------------------------------------------

LimitBuilder::LimitBuilder(FinSpace seed) : stage_(std::move(seed)) {
  ValidationReport report = validate(stage_);
  if (!report.valid()) throw InvalidSpace(std::move(report));
  created_ = stage_.points();
  std::sort(created_.begin(), created_.end());
}

void LimitBuilder::start_level() {
  ++level_;
  prev_points_ = level_points_;
  prev_rationals_ = level_rationals_;
  level_points_ = std::min(level_points_ + 1, created_.size());
  level_rationals_ += 1;
  subset_.clear();
  digits_.clear();
  slot_ = 0;
  cursor_live_ = true;
}

bool LimitBuilder::step_cursor() {
  const std::size_t s = subset_.size();
  if (slot_ < s) {
    ++slot_;
    return true;
  }
  slot_ = 0;
  // Distance vector odometer, last entry fastest.
  for (std::size_t k = s; k-- > 0;) {
    if (++digits_[k] < level_rationals_) return true;
    digits_[k] = 0;
  }
  // Next subset of the same size in lexicographic order.
  const std::size_t p = level_points_;
  for (std::size_t k = s; k-- > 0;) {
    if (subset_[k] < p - (s - k)) {
      ++subset_[k];
      for (std::size_t t = k + 1; t < s; ++t) subset_[t] = subset_[t - 1] + 1;
      return true;
    }
  }
  if (s + 1 > p) return false;
  subset_.resize(s + 1);
  for (std::size_t t = 0; t <= s; ++t) subset_[t] = t;
  digits_.assign(s + 1, 0);
  return true;
}

std::optional<ExtensionTask> LimitBuilder::cursor_task() {
  if (level_ > 1) {
    const bool fresh_point =
        std::any_of(subset_.begin(), subset_.end(),
                    [&](std::size_t i) { return i >= prev_points_; });
    const bool fresh_value =
        std::any_of(digits_.begin(), digits_.end(),
                    [&](std::size_t r) { return r >= prev_rationals_; });
    if (!fresh_point && !fresh_value) return std::nullopt;
  }
  std::vector<PointId> ids;
  ids.reserve(subset_.size());
  for (std::size_t i : subset_) ids.push_back(created_[i]);
  const FinSpace base = stage_.induced(ids);

  ExtensionTask task;
  task.subset = base.points();
  for (std::size_t k = 0; k < subset_.size(); ++k) {
    task.ext.distances[created_[subset_[k]]] = rationals_.at(digits_[k]);
  }
  task.ext.slot = slot_;
  if (!extension_feasible(base, task.ext.distances)) return std::nullopt;
  return task;
}

void LimitBuilder::fill_queue() {
  while (queue_.empty()) {
    if (!cursor_live_) {
      if (level_ > 0) {
        covered_points_ = level_points_;
        covered_rationals_ = level_rationals_;
      }
      start_level();
    }
    if (auto task = cursor_task()) queue_.push_back(std::move(*task));
    cursor_live_ = step_cursor();
  }
}

const ExtensionTask& LimitBuilder::peek_task() {
  fill_queue();
  return queue_.front();
}

void LimitBuilder::grow(std::size_t steps) {
  for (std::size_t i = 0; i < steps; ++i) {
    fill_queue();
    ExtensionTask task = std::move(queue_.front());
    queue_.pop_front();
    realize(task.subset, task.ext);
  }
}

PointId LimitBuilder::realize(std::span<const PointId> sub,
                              const ExtensionType& ext) {
  const FinSpace base = stage_.induced(sub);
  const PointId fresh = stage_.next_id();
  const FinSpace extended = extend_one_point(base, ext, fresh);
  const Embedding in_base = inclusion(base);
  Amalgam merged = amalgamate(stage_, extended, base, in_base, in_base);
  stage_ = std::move(merged.space);
  created_.push_back(fresh);
  return fresh;
}

// --- back and forth --------------------------------------------------------

namespace {

bool contains(const std::vector<PointId>& v, PointId p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

std::size_t count_below(const FinSpace& stage, const std::vector<PointId>& pts,
                        std::size_t pos) {
  std::size_t n = 0;
  for (PointId p : pts) n += stage.index_of(p) < pos ? 1 : 0;
  return n;
}

// Forth step for q: find or create a partner for target.
PartialIso extend_forth(LimitBuilder& builder, const PartialIso& q,
                        PointId target) {
  const FinSpace& stage = builder.stage();
  const std::size_t tpos = stage.index_of(target);

  ExtensionType type;
  for (std::size_t i = 0; i < q.size(); ++i) {
    type.distances[q.cod[i]] = stage.distance_at(tpos, stage.index_of(q.dom[i]));
  }
  type.slot = count_below(stage, q.dom, tpos);

  std::optional<PointId> partner;
  for (PointId y : builder.creation_order()) {
    if (contains(q.cod, y)) continue;
    const std::size_t ypos = stage.index_of(y);
    if (count_below(stage, q.cod, ypos) != type.slot) continue;
    bool match = true;
    for (const auto& [c, d] : type.distances) {
      if (stage.distance_at(ypos, stage.index_of(c)) != d) {
        match = false;
        break;
      }
    }
    if (match) {
      partner = y;
      break;
    }
  }
  if (!partner) partner = builder.realize(q.cod, type);

  PartialIso out = q;
  out.dom.push_back(target);
  out.cod.push_back(*partner);
  return out;
}

}  // namespace

PartialIso back_and_forth_extend(LimitBuilder& builder, const PartialIso& p,
                                 PointId target, Side side) {
  if (!is_partial_iso(builder.stage(), p)) {
    throw std::invalid_argument("back_and_forth_extend: not a partial iso");
  }
  builder.stage().index_of(target);
  if (side == Side::kForth) {
    if (p.image(target)) return p;
    return extend_forth(builder, p, target);
  }
  if (p.preimage(target)) return p;
  return extend_forth(builder, p.inverse(), target).inverse();
}

FuelExhausted::FuelExhausted(std::size_t fuel)
    : std::runtime_error("needs more fuel: point not reached within " +
                         std::to_string(fuel) + " back-and-forth steps") {}

AutoImage apply_auto(LimitBuilder& builder, const PartialIso& p, PointId x,
                     std::size_t fuel) {
  if (fuel < 1) throw std::invalid_argument("apply_auto needs fuel >= 1");
  if (!is_partial_iso(builder.stage(), p)) {
    throw std::invalid_argument("apply_auto: not a partial iso");
  }
  AutoImage out{PointId{}, p, 0};
  if (auto img = p.image(x)) {
    out.image = *img;
    return out;
  }
  builder.stage().index_of(x);
  for (std::size_t step = 0; step < fuel; ++step) {
    const bool forth = step % 2 == 0;
    const auto& used = forth ? out.extension.dom : out.extension.cod;
    std::optional<PointId> target;
    for (PointId y : builder.creation_order()) {
      if (!contains(used, y)) {
        target = y;
        break;
      }
    }
    ++out.steps;
    if (!target) continue;
    out.extension = back_and_forth_extend(
        builder, out.extension, *target, forth ? Side::kForth : Side::kBack);
    if (auto img = out.extension.image(x)) {
      out.image = *img;
      return out;
    }
  }
  throw FuelExhausted(fuel);
}

}  // namespace urysohn
