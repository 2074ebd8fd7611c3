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

#include "urysohn/symmetry.h"

#include <stdexcept>

namespace urysohn {
namespace {

// Adds x -> y to the map unless it clashes with an existing pair.
bool add_pair(PartialIso& map, PointId x, PointId y) {
  auto img = map.image(x);
  auto pre = map.preimage(y);
  if (img || pre) return img == y && pre == x;
  map.dom.push_back(x);
  map.cod.push_back(y);
  return true;
}

// Is the single new pair (x -> y) compatible with the rest of `map`?
bool compatible(const FinSpace& stage, const PartialIso& map, PointId x,
                PointId y) {
  const std::size_t px = stage.index_of(x);
  const std::size_t py = stage.index_of(y);
  for (std::size_t i = 0; i < map.size(); ++i) {
    const std::size_t a = stage.index_of(map.dom[i]);
    const std::size_t b = stage.index_of(map.cod[i]);
    if ((a < px) != (b < py)) return false;
    if (stage.distance_at(a, px) != stage.distance_at(b, py)) return false;
  }
  return true;
}

}  // namespace

std::optional<PartialIso> fix_orbit_witness(const FinSpace& stage,
                                            const Support& support,
                                            std::span<const PointId> t1,
                                            std::span<const PointId> t2) {
  if (t1.size() != t2.size()) {
    throw std::invalid_argument("orbit tuples have different lengths");
  }
  for (PointId b : support.points) stage.index_of(b);
  for (std::size_t i = 0; i < t1.size(); ++i) {
    stage.index_of(t1[i]);
    stage.index_of(t2[i]);
  }
  PartialIso map;
  for (PointId b : support.points) {
    if (!add_pair(map, b, b)) return std::nullopt;
  }
  for (std::size_t i = 0; i < t1.size(); ++i) {
    if (!add_pair(map, t1[i], t2[i])) return std::nullopt;
  }
  if (!is_partial_iso(stage, map)) return std::nullopt;
  return map;
}

bool same_fix_orbit(const FinSpace& stage, const Support& support,
                    std::span<const PointId> t1, std::span<const PointId> t2) {
  return fix_orbit_witness(stage, support, t1, t2).has_value();
}

std::vector<Tuple> orbit_traces(const FinSpace& stage, const Support& support,
                                std::span<const PointId> t) {
  for (PointId p : t) stage.index_of(p);
  PartialIso fixed;
  for (PointId b : support.points) {
    stage.index_of(b);
    add_pair(fixed, b, b);
  }

  std::vector<Tuple> out;
  Tuple current;
  // Depth-first over target points in stage order.
  auto recurse = [&](auto& self, const PartialIso& map) -> void {
    const std::size_t depth = current.size();
    if (depth == t.size()) {
      out.push_back(current);
      return;
    }
    if (auto forced = map.image(t[depth])) {
      current.push_back(*forced);
      self(self, map);
      current.pop_back();
      return;
    }
    for (PointId y : stage.points()) {
      if (map.preimage(y)) continue;
      if (!compatible(stage, map, t[depth], y)) continue;
      PartialIso next = map;
      next.dom.push_back(t[depth]);
      next.cod.push_back(y);
      current.push_back(y);
      self(self, next);
      current.pop_back();
    }
  };
  recurse(recurse, fixed);
  return out;
}

}  // namespace urysohn
