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

// Text format for spaces:
//
//   space
//   point <name>            one per point, in order
//   dist <p> <q> <n>/<d>    one per unordered pair
//   end
//
// Names match [A-Za-z0-9_]+. Blank lines and lines starting with '#' are
// ignored. The canonical form lists dist lines in (i, j) order with i before
// j in the point order and rationals in lowest terms.

#ifndef URYSOHN_SPACE_IO_H_
#define URYSOHN_SPACE_IO_H_

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "urysohn/space.h"

namespace urysohn {

using PointNames = std::map<PointId, std::string>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  /// 1-based; 0 for errors found after the last line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ParsedSpace {
  /// Points get ids 0, 1, ... in file order. The table is complete and
  /// symmetric but not otherwise validated.
  SpaceTable table;
  PointNames names;
};

/// Throws ParseError on duplicate names, duplicate or missing pairs,
/// malformed rationals and structural errors.
ParsedSpace parse_space(std::string_view text);

bool is_valid_name(std::string_view name);

/// Canonical document. Points without an entry in `names` are written as
/// "p<id>". Throws std::invalid_argument if the resulting names are invalid
/// or not distinct.
std::string serialize_space(const FinSpace& space, const PointNames& names = {});

/// Name for p from `names`, or "p<id>".
std::string point_name(const PointNames& names, PointId p);

}  // namespace urysohn

#endif  // URYSOHN_SPACE_IO_H_
