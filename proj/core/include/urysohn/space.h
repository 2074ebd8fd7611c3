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

// Finite totally ordered rational-valued metric spaces.
//
// A SpaceTable is an arbitrary candidate (it may be incomplete, asymmetric or
// violate the triangle inequality); validate() reports everything that is
// wrong with it. A FinSpace is a table that has passed validation and is
// immutable from then on. The list order of points() is the strict order.

#ifndef URYSOHN_SPACE_H_
#define URYSOHN_SPACE_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "urysohn/rational.h"

namespace urysohn {

/// Stable point name. Allocation order is unrelated to the strict order of
/// any space the point lives in.
struct PointId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(const PointId&, const PointId&) = default;
};

std::ostream& operator<<(std::ostream& os, PointId id);

/// Raw, possibly illegal distance table over an ordered point list.
class SpaceTable {
 public:
  SpaceTable() = default;
  /// Diagonal entries start at 0; everything else starts missing.
  explicit SpaceTable(std::vector<PointId> points);

  const std::vector<PointId>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  /// Sets both orientations. Throws std::out_of_range for unknown points.
  void set(PointId p, PointId q, const Rat& d);
  /// Sets only the (p, q) entry.
  void set_directed(PointId p, PointId q, const Rat& d);
  std::optional<Rat> get(PointId p, PointId q) const;

  const std::optional<Rat>& at(std::size_t i, std::size_t j) const {
    return entries_[i * points_.size() + j];
  }
  /// Position of the first occurrence of p in the order, if any.
  std::optional<std::size_t> position(PointId p) const;

 private:
  std::size_t require(PointId p) const;

  std::vector<PointId> points_;
  std::vector<std::optional<Rat>> entries_;
};

struct Violation {
  enum class Kind {
    kMissingPair,  // malformed table: an orientation of a pair is absent
    kIdentity,     // d(x, x) != 0
    kSymmetry,     // d(x, y) != d(y, x)
    kPositivity,   // d(x, y) <= 0 for x != y
    kTriangle,     // d(x, z) > d(x, y) + d(y, z)
    kOrder,        // point repeated in the order list
  };

  Kind kind;
  /// Pair (x, y), triple (x, y, z) for kTriangle, or the single point.
  std::vector<PointId> points;
  /// Offending values: d(x,y) [, d(y,x)]; for triangles d(x,z), d(x,y)+d(y,z).
  std::vector<Rat> values;
};

const char* to_string(Violation::Kind kind);

/// One human readable line, e.g. "triangle p q r: d(p,r) = 3/1 > 2/1".
std::string describe(const Violation& v,
                     const std::function<std::string(PointId)>& name);

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
};

/// Lists every violated axiom. Triangle triples are reported once per
/// (x, z) pair with x before z in the order and any middle point y.
ValidationReport validate(const SpaceTable& table);

class InvalidSpace : public std::invalid_argument {
 public:
  explicit InvalidSpace(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Validated finite totally ordered Q-valued metric space.
class FinSpace {
 public:
  /// The empty space.
  FinSpace() = default;

  /// Throws InvalidSpace carrying the full report.
  static FinSpace from_table(const SpaceTable& table);

  /// Builds from an ordered point list and a dense row-major distance
  /// matrix without re-running validation. The caller guarantees the
  /// metric and order axioms; used by constructions that establish them
  /// locally (one-point extension, amalgamation).
  static FinSpace assume_valid(std::vector<PointId> points,
                               std::vector<Rat> distances);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<PointId>& points() const { return points_; }
  const PointId& point(std::size_t i) const { return points_[i]; }

  bool contains(PointId p) const { return position(p).has_value(); }
  std::optional<std::size_t> position(PointId p) const;
  /// Throws std::out_of_range when p is not a point of this space.
  std::size_t index_of(PointId p) const;

  const Rat& distance_at(std::size_t i, std::size_t j) const {
    return dist_[i * points_.size() + j];
  }
  const Rat& distance(PointId p, PointId q) const {
    return distance_at(index_of(p), index_of(q));
  }
  /// Strict order test.
  bool precedes(PointId p, PointId q) const {
    return index_of(p) < index_of(q);
  }

  /// One past the largest PointId in use (0 for the empty space).
  PointId next_id() const;

  /// Induced subspace on the given points, re-sorted into this space's order.
  FinSpace induced(std::span<const PointId> subset) const;

  SpaceTable table() const;

  friend bool operator==(const FinSpace&, const FinSpace&) = default;

 private:
  void index();

  std::vector<PointId> points_;
  std::vector<Rat> dist_;
  // (id, position) sorted by id.
  std::vector<std::pair<PointId, std::uint32_t>> by_id_;
};

ValidationReport validate(const FinSpace& space);

/// Injective map from every point of a source space (listed in the source's
/// order) to points of a target space.
struct Embedding {
  std::vector<PointId> source;
  std::vector<PointId> target;

  std::size_t size() const { return source.size(); }
  /// Throws std::out_of_range when p is not in the domain.
  PointId operator()(PointId p) const;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// True iff e covers exactly the points of src (in order) and preserves
/// distances and the strict order into dst.
bool is_embedding(const FinSpace& src, const FinSpace& dst, const Embedding& e);

/// The identity inclusion of sub into any space containing its points.
Embedding inclusion(const FinSpace& sub);

/// The order-preserving bijection, if it also preserves distances.
std::optional<Embedding> canonical_iso(const FinSpace& x, const FinSpace& y);

/// Lazily enumerates the embeddings of `source` into `target` in
/// lexicographic order of the chosen target positions.
///
/// Both spaces are borrowed and must outlive the stream.
class EmbeddingStream {
 public:
  /// Both spaces must outlive the stream.
  EmbeddingStream(const FinSpace& source, const FinSpace& target);
  EmbeddingStream(FinSpace&&, const FinSpace&) = delete;
  EmbeddingStream(const FinSpace&, FinSpace&&) = delete;

  std::optional<Embedding> next();

  class iterator {
   public:
    using value_type = Embedding;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(EmbeddingStream* stream) : stream_(stream) { ++*this; }

    const Embedding& operator*() const { return *current_; }
    const Embedding* operator->() const { return &*current_; }
    iterator& operator++() {
      current_ = stream_->next();
      if (!current_) stream_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.stream_ == b.stream_;
    }

   private:
    EmbeddingStream* stream_ = nullptr;
    std::optional<Embedding> current_;
  };

  iterator begin() { return iterator(this); }
  iterator end() { return iterator(); }

 private:
  bool compatible(std::size_t depth, std::size_t candidate) const;
  Embedding current() const;

  const FinSpace& source_;
  const FinSpace& target_;
  std::vector<std::size_t> chosen_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Embedding> enumerate_embeddings(const FinSpace& x,
                                            const FinSpace& y);

/// Largest pairwise distance; 0 for a singleton. Throws std::domain_error
/// for the empty space.
Rat diameter(const FinSpace& space);

/// Points strictly closer than `radius` to `center`, in the space's order.
/// Throws std::out_of_range for an absent center and std::invalid_argument
/// for a non-positive radius.
std::vector<PointId> ball_trace(const FinSpace& space, PointId center,
                                const Rat& radius);

}  // namespace urysohn

template <>
struct std::hash<urysohn::PointId> {
  std::size_t operator()(urysohn::PointId p) const noexcept {
    return std::hash<std::uint32_t>{}(p.value);
  }
};

#endif  // URYSOHN_SPACE_H_
