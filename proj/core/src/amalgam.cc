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

#include <algorithm>
#include <sstream>

namespace urysohn {
namespace {

std::string pair_text(PointId x, PointId y) {
  return "(" + std::to_string(x.value) + ", " + std::to_string(y.value) + ")";
}

// dvec as a vector aligned with base positions.
std::vector<Rat> aligned(const FinSpace& base, const DistanceVector& dvec) {
  std::vector<Rat> out(base.size());
  std::vector<bool> seen(base.size(), false);
  for (const auto& [p, d] : dvec) {
    auto pos = base.position(p);
    if (!pos) {
      throw std::invalid_argument("distance vector names point " +
                                  std::to_string(p.value) +
                                  " outside the base");
    }
    out[*pos] = d;
    seen[*pos] = true;
  }
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (!seen[i]) {
      throw std::invalid_argument("distance vector has no entry for point " +
                                  std::to_string(base.point(i).value));
    }
  }
  return out;
}

std::string describe_space(const FinSpace& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (i + j > 1) os << ' ';
      os << i << '-' << j << ':' << s.distance_at(i, j);
    }
  }
  os << ']';
  return os.str();
}

std::string describe_embedding(const Embedding& e) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) os << ' ';
    os << e.source[i].value << "->" << e.target[i].value;
  }
  os << '}';
  return os.str();
}

// Checks everything promised about an amalgam; returns the failure reason.
std::optional<std::string> audit_amalgam(const FinSpace& a, const FinSpace& b,
                                         const FinSpace& c,
                                         const Embedding& c_to_a,
                                         const Embedding& c_to_b,
                                         const Amalgam& out) {
  if (!validate(out.space).valid()) return "amalgam fails validation";
  if (!is_embedding(a, out.space, out.from_a)) return "a -> d not an embedding";
  if (!is_embedding(b, out.space, out.from_b)) return "b -> d not an embedding";
  for (PointId z : c.points()) {
    if (out.from_a(c_to_a(z)) != out.from_b(c_to_b(z))) {
      return "square does not commute at " + std::to_string(z.value);
    }
  }
  std::vector<PointId> img_a = out.from_a.target;
  std::vector<PointId> img_b = out.from_b.target;
  std::sort(img_a.begin(), img_a.end());
  std::sort(img_b.begin(), img_b.end());
  std::vector<PointId> common;
  std::set_intersection(img_a.begin(), img_a.end(), img_b.begin(), img_b.end(),
                        std::back_inserter(common));
  std::vector<PointId> img_c;
  for (PointId z : c.points()) img_c.push_back(out.from_a(c_to_a(z)));
  std::sort(img_c.begin(), img_c.end());
  if (common != img_c) return "images overlap outside the image of c";
  if (out.space.size() != a.size() + b.size() - c.size()) {
    return "embeddings are not jointly surjective";
  }
  return std::nullopt;
}

}  // namespace

InfeasibleExtension::InfeasibleExtension(PointId x, PointId y,
                                         const std::string& what)
    : std::invalid_argument(what), pair_(x, y) {}

std::optional<std::pair<PointId, PointId>> first_infeasible_pair(
    const FinSpace& base, const DistanceVector& dvec) {
  const std::vector<Rat> d = aligned(base, dvec);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d[i].is_positive()) return std::pair{base.point(i), base.point(i)};
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const Rat& dij = base.distance_at(i, j);
      if (dij > d[i] + d[j] || abs(d[i] - d[j]) > dij) {
        return std::pair{base.point(i), base.point(j)};
      }
    }
  }
  return std::nullopt;
}

bool extension_feasible(const FinSpace& base, const DistanceVector& dvec) {
  return !first_infeasible_pair(base, dvec).has_value();
}

FinSpace extend_one_point(const FinSpace& base, const ExtensionType& ext,
                          std::optional<PointId> new_id) {
  if (ext.slot > base.size()) {
    throw std::invalid_argument("order slot " + std::to_string(ext.slot) +
                                " is beyond the base");
  }
  if (auto bad = first_infeasible_pair(base, ext.distances)) {
    throw InfeasibleExtension(
        bad->first, bad->second,
        "infeasible extension: constraint on pair " +
            pair_text(bad->first, bad->second) + " fails");
  }
  const PointId fresh = new_id.value_or(base.next_id());
  if (base.contains(fresh)) {
    throw std::invalid_argument("new point id " + std::to_string(fresh.value) +
                                " already in use");
  }
  const std::vector<Rat> d = aligned(base, ext.distances);
  const std::size_t n = base.size() + 1;
  // old position i maps to i or i + 1 depending on the slot.
  auto shifted = [&](std::size_t i) { return i < ext.slot ? i : i + 1; };
  std::vector<PointId> pts(n);
  std::vector<Rat> dist(n * n);
  pts[ext.slot] = fresh;
  for (std::size_t i = 0; i < base.size(); ++i) {
    const std::size_t si = shifted(i);
    pts[si] = base.point(i);
    for (std::size_t j = 0; j < base.size(); ++j) {
      dist[si * n + shifted(j)] = base.distance_at(i, j);
    }
    dist[si * n + ext.slot] = d[i];
    dist[ext.slot * n + si] = d[i];
  }
  return FinSpace::assume_valid(std::move(pts), std::move(dist));
}

Amalgam amalgamate(const FinSpace& a, const FinSpace& b, const FinSpace& c,
                   const Embedding& c_to_a, const Embedding& c_to_b) {
  if (!is_embedding(c, a, c_to_a)) {
    throw std::invalid_argument("amalgamate: c -> a is not an embedding");
  }
  if (!is_embedding(c, b, c_to_b)) {
    throw std::invalid_argument("amalgamate: c -> b is not an embedding");
  }
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::size_t nc = c.size();

  std::vector<std::size_t> ca(nc);
  std::vector<std::size_t> cb(nc);
  for (std::size_t k = 0; k < nc; ++k) {
    ca[k] = a.index_of(c_to_a.target[k]);
    cb[k] = b.index_of(c_to_b.target[k]);
  }

  // Merged order. Each entry remembers its position in a and/or b.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  struct Slot {
    std::size_t in_a;
    std::size_t in_b;
  };
  std::vector<Slot> merged;
  merged.reserve(na + nb - nc);
  {
    std::size_t ia = 0;
    std::size_t ib = 0;
    for (std::size_t g = 0; g <= nc; ++g) {
      const std::size_t a_end = g < nc ? ca[g] : na;
      const std::size_t b_end = g < nc ? cb[g] : nb;
      for (; ia < a_end; ++ia) merged.push_back({ia, kNone});
      for (; ib < b_end; ++ib) merged.push_back({kNone, ib});
      if (g < nc) {
        merged.push_back({ca[g], cb[g]});
        ia = ca[g] + 1;
        ib = cb[g] + 1;
      }
    }
  }

  Rat jep_distance(0);
  if (nc == 0 && na > 0 && nb > 0) {
    jep_distance = Rat(1) + std::max(diameter(a), diameter(b));
  }
  auto cross = [&](std::size_t p, std::size_t q) {
    if (nc == 0) return jep_distance;
    Rat best = a.distance_at(p, ca[0]) + b.distance_at(cb[0], q);
    for (std::size_t k = 1; k < nc; ++k) {
      Rat via = a.distance_at(p, ca[k]) + b.distance_at(cb[k], q);
      if (via < best) best = via;
    }
    for (std::size_t k = 0; k < nc; ++k) {
      const Rat& dp = a.distance_at(p, ca[k]);
      const Rat& dq = b.distance_at(cb[k], q);
      if (abs(dp - dq) > best) {
        throw std::logic_error("amalgamate: cross distance below lower bound");
      }
    }
    return best;
  };

  const std::size_t n = merged.size();
  std::vector<PointId> pts(n);
  std::vector<PointId> b_target(nb);
  PointId fresh = a.next_id();
  for (std::size_t i = 0; i < n; ++i) {
    const Slot& s = merged[i];
    if (s.in_a != kNone) {
      pts[i] = a.point(s.in_a);
    } else {
      pts[i] = fresh;
      fresh.value += 1;
    }
    if (s.in_b != kNone) b_target[s.in_b] = pts[i];
  }

  std::vector<Rat> dist(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Slot& u = merged[i];
      const Slot& v = merged[j];
      Rat d;
      if (u.in_a != kNone && v.in_a != kNone) {
        d = a.distance_at(u.in_a, v.in_a);
      } else if (u.in_b != kNone && v.in_b != kNone) {
        d = b.distance_at(u.in_b, v.in_b);
      } else if (u.in_a != kNone) {
        d = cross(u.in_a, v.in_b);
      } else {
        d = cross(v.in_a, u.in_b);
      }
      dist[i * n + j] = d;
      dist[j * n + i] = d;
    }
  }

  Amalgam out{FinSpace::assume_valid(std::move(pts), std::move(dist)),
              Embedding{a.points(), a.points()},
              Embedding{b.points(), std::move(b_target)}};
  return out;
}

std::vector<FinSpace> enumerate_grid_spaces(std::size_t max_size,
                                            std::span<const Rat> grid) {
  std::vector<Rat> values(grid.begin(), grid.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<FinSpace> out;
  for (std::size_t size = 1; size <= max_size; ++size) {
    std::vector<PointId> pts(size);
    for (std::size_t i = 0; i < size; ++i) {
      pts[i] = PointId{static_cast<std::uint32_t>(i)};
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) pairs.emplace_back(i, j);
    }
    const std::size_t first_of_size = out.size();
    std::vector<std::size_t> digit(pairs.size(), 0);
    for (;;) {
      SpaceTable table(pts);
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        table.set(pts[pairs[k].first], pts[pairs[k].second], values[digit[k]]);
      }
      if (validate(table).valid()) {
        FinSpace candidate = FinSpace::from_table(table);
        bool seen = false;
        for (std::size_t i = first_of_size; i < out.size() && !seen; ++i) {
          seen = canonical_iso(out[i], candidate).has_value();
        }
        if (!seen) out.push_back(std::move(candidate));
      }
      std::size_t k = 0;
      while (k < digit.size() && ++digit[k] == values.size()) digit[k++] = 0;
      if (k == digit.size()) break;
    }
  }
  return out;
}

FraisseReport check_fraisse_properties(std::size_t max_size,
                                       std::span<const Rat> grid) {
  if (max_size < 2) {
    throw std::invalid_argument("fraisse check needs max_size >= 2");
  }
  if (grid.empty()) throw std::invalid_argument("fraisse check needs a grid");
  for (const Rat& q : grid) {
    if (!q.is_positive()) {
      throw std::invalid_argument("grid value " + q.to_string() +
                                  " is not positive");
    }
  }

  FraisseReport report;
  report.max_size = max_size;
  report.grid.assign(grid.begin(), grid.end());
  const std::vector<FinSpace> spaces = enumerate_grid_spaces(max_size, grid);
  report.structures_by_size.assign(max_size + 1, 0);
  for (const FinSpace& s : spaces) ++report.structures_by_size[s.size()];

  // Hereditary property: every induced ordered subspace validates.
  for (const FinSpace& s : spaces) {
    const std::size_t n = s.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<PointId> sub;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) sub.push_back(s.point(i));
      }
      ++report.hp_checked;
      if (!report.hp_counterexample && !validate(s.induced(sub)).valid()) {
        report.hp_counterexample =
            "subspace of " + describe_space(s) + " fails validation";
      }
    }
  }

  const FinSpace empty;
  const Embedding none{};
  for (const FinSpace& a : spaces) {
    for (const FinSpace& b : spaces) {
      ++report.jep_checked;
      if (report.jep_counterexample) continue;
      auto failure = audit_amalgam(a, b, empty, none, none,
                                   amalgamate(a, b, empty, none, none));
      if (failure) {
        report.jep_counterexample =
            *failure + ": a=" + describe_space(a) + " b=" + describe_space(b);
      }
    }
  }

  for (const FinSpace& c : spaces) {
    std::vector<std::pair<const FinSpace*, Embedding>> spans;
    for (const FinSpace& a : spaces) {
      if (a.size() < c.size()) continue;
      EmbeddingStream stream(c, a);
      while (auto e = stream.next()) spans.emplace_back(&a, std::move(*e));
    }
    for (const auto& [a, ea] : spans) {
      for (const auto& [b, eb] : spans) {
        ++report.ap_checked;
        if (report.ap_counterexample) continue;
        auto failure = audit_amalgam(*a, *b, c, ea, eb,
                                     amalgamate(*a, *b, c, ea, eb));
        if (failure) {
          report.ap_counterexample =
              *failure + ": c=" + describe_space(c) + " a=" +
              describe_space(*a) + " via " + describe_embedding(ea) +
              " b=" + describe_space(*b) + " via " + describe_embedding(eb);
        }
      }
    }
  }
  return report;
}

}  // namespace urysohn
