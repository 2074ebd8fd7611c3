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

#include "urysohn/space.h"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace urysohn {

std::ostream& operator<<(std::ostream& os, PointId id) {
  return os << '#' << id.value;
}

// --- SpaceTable ------------------------------------------------------------

SpaceTable::SpaceTable(std::vector<PointId> points)
    : points_(std::move(points)),
      entries_(points_.size() * points_.size()) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    entries_[i * points_.size() + i] = Rat(0);
  }
}

std::optional<std::size_t> SpaceTable::position(PointId p) const {
  auto it = std::find(points_.begin(), points_.end(), p);
  if (it == points_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

std::size_t SpaceTable::require(PointId p) const {
  auto pos = position(p);
  if (!pos) {
    throw std::out_of_range("point " + std::to_string(p.value) +
                            " is not in the table");
  }
  return *pos;
}

void SpaceTable::set(PointId p, PointId q, const Rat& d) {
  set_directed(p, q, d);
  set_directed(q, p, d);
}

void SpaceTable::set_directed(PointId p, PointId q, const Rat& d) {
  entries_[require(p) * points_.size() + require(q)] = d;
}

std::optional<Rat> SpaceTable::get(PointId p, PointId q) const {
  return entries_[require(p) * points_.size() + require(q)];
}

// --- validation ------------------------------------------------------------

const char* to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kMissingPair: return "missing-pair";
    case Violation::Kind::kIdentity: return "identity";
    case Violation::Kind::kSymmetry: return "symmetry";
    case Violation::Kind::kPositivity: return "positivity";
    case Violation::Kind::kTriangle: return "triangle";
    case Violation::Kind::kOrder: return "order";
  }
  return "unknown";
}

std::string describe(const Violation& v,
                     const std::function<std::string(PointId)>& name) {
  std::ostringstream os;
  os << to_string(v.kind);
  for (PointId p : v.points) os << ' ' << name(p);
  switch (v.kind) {
    case Violation::Kind::kMissingPair:
      break;
    case Violation::Kind::kIdentity:
      os << ": d = " << v.values.at(0);
      break;
    case Violation::Kind::kSymmetry:
      os << ": " << v.values.at(0) << " != " << v.values.at(1);
      break;
    case Violation::Kind::kPositivity:
      os << ": d = " << v.values.at(0);
      break;
    case Violation::Kind::kTriangle:
      os << ": d(" << name(v.points[0]) << ',' << name(v.points[2])
         << ") = " << v.values.at(0) << " > " << v.values.at(1);
      break;
    case Violation::Kind::kOrder:
      os << ": repeated in order";
      break;
  }
  return os.str();
}

namespace {

// `get(i, j)` yields a pointer to the (i, j) entry or nullptr when missing.
template <typename Get>
ValidationReport validate_entries(const std::vector<PointId>& pts, Get get) {
  using Kind = Violation::Kind;
  ValidationReport report;
  const std::size_t n = pts.size();

  std::vector<bool> repeated(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (pts[i] == pts[j] && !repeated[j]) {
        repeated[j] = true;
        report.violations.push_back({Kind::kOrder, {pts[i]}, {}});
        break;
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Rat* self = get(i, i);
    if (!self) {
      report.violations.push_back({Kind::kMissingPair, {pts[i], pts[i]}, {}});
    } else if (!self->is_zero()) {
      report.violations.push_back({Kind::kIdentity, {pts[i]}, {*self}});
    }
  }

  bool any_missing = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rat* dij = get(i, j);
      const Rat* dji = get(j, i);
      if (!dij || !dji) {
        any_missing = true;
        report.violations.push_back({Kind::kMissingPair, {pts[i], pts[j]}, {}});
        continue;
      }
      if (*dij != *dji) {
        report.violations.push_back(
            {Kind::kSymmetry, {pts[i], pts[j]}, {*dij, *dji}});
      }
      if (!dij->is_positive()) {
        report.violations.push_back({Kind::kPositivity, {pts[i], pts[j]}, {*dij}});
      }
    }
  }

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = x + 1; z < n; ++z) {
      const Rat* dxz = get(x, z);
      if (!dxz) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x || y == z) continue;
        const Rat* dxy = get(x, y);
        const Rat* dyz = get(y, z);
        if (any_missing && (!dxy || !dyz)) continue;
        if (*dxz > *dxy + *dyz) {
          report.violations.push_back(
              {Kind::kTriangle, {pts[x], pts[y], pts[z]}, {*dxz, *dxy + *dyz}});
        }
      }
    }
  }
  return report;
}

}  // namespace

ValidationReport validate(const SpaceTable& table) {
  return validate_entries(table.points(),
                          [&](std::size_t i, std::size_t j) -> const Rat* {
                            const auto& e = table.at(i, j);
                            return e ? &*e : nullptr;
                          });
}

namespace {

std::string summarize(const ValidationReport& report) {
  std::string msg = "invalid space";
  if (!report.violations.empty()) {
    msg += ": ";
    msg += describe(report.violations.front(), [](PointId p) {
      return "#" + std::to_string(p.value);
    });
    if (report.violations.size() > 1) {
      msg += " (+" + std::to_string(report.violations.size() - 1) + " more)";
    }
  }
  return msg;
}

}  // namespace

InvalidSpace::InvalidSpace(ValidationReport report)
    : std::invalid_argument(summarize(report)), report_(std::move(report)) {}

// --- FinSpace --------------------------------------------------------------

FinSpace FinSpace::from_table(const SpaceTable& table) {
  ValidationReport report = validate(table);
  if (!report.valid()) throw InvalidSpace(std::move(report));
  const std::size_t n = table.size();
  std::vector<Rat> dist(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) dist[i * n + j] = *table.at(i, j);
  }
  return assume_valid(table.points(), std::move(dist));
}

FinSpace FinSpace::assume_valid(std::vector<PointId> points,
                                std::vector<Rat> distances) {
  if (distances.size() != points.size() * points.size()) {
    throw std::invalid_argument("distance matrix has the wrong size");
  }
  FinSpace s;
  s.points_ = std::move(points);
  s.dist_ = std::move(distances);
  s.index();
  return s;
}

void FinSpace::index() {
  by_id_.clear();
  by_id_.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    by_id_.emplace_back(points_[i], static_cast<std::uint32_t>(i));
  }
  std::sort(by_id_.begin(), by_id_.end());
}

std::optional<std::size_t> FinSpace::position(PointId p) const {
  auto it = std::lower_bound(
      by_id_.begin(), by_id_.end(), p,
      [](const auto& entry, PointId id) { return entry.first < id; });
  if (it == by_id_.end() || it->first != p) return std::nullopt;
  return it->second;
}

std::size_t FinSpace::index_of(PointId p) const {
  auto pos = position(p);
  if (!pos) {
    throw std::out_of_range("point " + std::to_string(p.value) +
                            " is not in the space");
  }
  return *pos;
}

PointId FinSpace::next_id() const {
  if (by_id_.empty()) return PointId{0};
  return PointId{by_id_.back().first.value + 1};
}

FinSpace FinSpace::induced(std::span<const PointId> subset) const {
  std::vector<std::size_t> idx;
  idx.reserve(subset.size());
  for (PointId p : subset) idx.push_back(index_of(p));
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  const std::size_t k = idx.size();
  std::vector<PointId> pts(k);
  std::vector<Rat> dist(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    pts[i] = points_[idx[i]];
    for (std::size_t j = 0; j < k; ++j) {
      dist[i * k + j] = distance_at(idx[i], idx[j]);
    }
  }
  return assume_valid(std::move(pts), std::move(dist));
}

SpaceTable FinSpace::table() const {
  SpaceTable t(points_);
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t.set_directed(points_[i], points_[j], distance_at(i, j));
    }
  }
  return t;
}

ValidationReport validate(const FinSpace& space) {
  return validate_entries(space.points(),
                          [&](std::size_t i, std::size_t j) -> const Rat* {
                            return &space.distance_at(i, j);
                          });
}

// --- embeddings ------------------------------------------------------------

PointId Embedding::operator()(PointId p) const {
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (source[i] == p) return target[i];
  }
  throw std::out_of_range("point " + std::to_string(p.value) +
                          " is not in the embedding domain");
}

bool is_embedding(const FinSpace& src, const FinSpace& dst,
                  const Embedding& e) {
  if (e.source != src.points() || e.target.size() != e.source.size()) {
    return false;
  }
  std::vector<std::size_t> img(e.target.size());
  for (std::size_t i = 0; i < e.target.size(); ++i) {
    auto pos = dst.position(e.target[i]);
    if (!pos) return false;
    img[i] = *pos;
  }
  // Strictly increasing positions give both injectivity and order.
  for (std::size_t i = 1; i < img.size(); ++i) {
    if (img[i - 1] >= img[i]) return false;
  }
  for (std::size_t i = 0; i < img.size(); ++i) {
    for (std::size_t j = i + 1; j < img.size(); ++j) {
      if (src.distance_at(i, j) != dst.distance_at(img[i], img[j])) {
        return false;
      }
    }
  }
  return true;
}

Embedding inclusion(const FinSpace& sub) {
  return Embedding{sub.points(), sub.points()};
}

std::optional<Embedding> canonical_iso(const FinSpace& x, const FinSpace& y) {
  if (x.size() != y.size()) return std::nullopt;
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (x.distance_at(i, j) != y.distance_at(i, j)) return std::nullopt;
    }
  }
  return Embedding{x.points(), y.points()};
}

EmbeddingStream::EmbeddingStream(const FinSpace& source, const FinSpace& target)
    : source_(source), target_(target) {
  chosen_.reserve(source.size());
}

bool EmbeddingStream::compatible(std::size_t depth,
                                 std::size_t candidate) const {
  for (std::size_t i = 0; i < depth; ++i) {
    if (source_.distance_at(i, depth) !=
        target_.distance_at(chosen_[i], candidate)) {
      return false;
    }
  }
  return true;
}

Embedding EmbeddingStream::current() const {
  Embedding e;
  e.source = source_.points();
  e.target.reserve(chosen_.size());
  for (std::size_t t : chosen_) e.target.push_back(target_.point(t));
  return e;
}

std::optional<Embedding> EmbeddingStream::next() {
  if (done_) return std::nullopt;
  const std::size_t k = source_.size();
  const std::size_t n = target_.size();
  std::size_t candidate = 0;
  if (!started_) {
    started_ = true;
  } else {
    if (k == 0) {
      done_ = true;
      return std::nullopt;
    }
    candidate = chosen_.back() + 1;
    chosen_.pop_back();
  }
  for (;;) {
    const std::size_t depth = chosen_.size();
    if (depth == k) return current();
    bool advanced = false;
    for (; candidate + (k - depth) <= n; ++candidate) {
      if (compatible(depth, candidate)) {
        chosen_.push_back(candidate);
        candidate = candidate + 1;
        advanced = true;
        break;
      }
    }
    if (advanced) continue;
    if (chosen_.empty()) {
      done_ = true;
      return std::nullopt;
    }
    candidate = chosen_.back() + 1;
    chosen_.pop_back();
  }
}

std::vector<Embedding> enumerate_embeddings(const FinSpace& x,
                                            const FinSpace& y) {
  std::vector<Embedding> out;
  EmbeddingStream stream(x, y);
  while (auto e = stream.next()) out.push_back(std::move(*e));
  return out;
}

Rat diameter(const FinSpace& space) {
  if (space.empty()) {
    throw std::domain_error("diameter of the empty space is undefined");
  }
  Rat best(0);
  const std::size_t n = space.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      best = std::max(best, space.distance_at(i, j));
    }
  }
  return best;
}

std::vector<PointId> ball_trace(const FinSpace& space, PointId center,
                                const Rat& radius) {
  const std::size_t c = space.index_of(center);
  if (!radius.is_positive()) {
    throw std::invalid_argument("ball radius must be positive");
  }
  std::vector<PointId> out;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (space.distance_at(c, i) < radius) out.push_back(space.point(i));
  }
  return out;
}

}  // namespace urysohn
