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

#include "urysohn/space_io.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace urysohn {
namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what
                                   : "line " + std::to_string(line) + ": " +
                                         what),
      line_(line) {}

bool is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

ParsedSpace parse_space(std::string_view text) {
  enum class State { kHeader, kPoints, kDists, kDone };
  State state = State::kHeader;

  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
  struct Entry {
    std::size_t i;
    std::size_t j;
    Rat d;
    std::size_t line;
  };
  std::vector<Entry> entries;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                      : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto words = split_words(line);
    if (words.empty() || words.front().front() == '#') continue;
    const std::string_view head = words.front();

    if (state == State::kDone) {
      throw ParseError(line_no, "content after 'end'");
    }
    if (state == State::kHeader) {
      if (head != "space" || words.size() != 1) {
        throw ParseError(line_no, "expected 'space' header");
      }
      state = State::kPoints;
      continue;
    }
    if (head == "end") {
      if (words.size() != 1) throw ParseError(line_no, "malformed 'end'");
      state = State::kDone;
      continue;
    }
    if (head == "point") {
      if (state != State::kPoints) {
        throw ParseError(line_no, "'point' after 'dist' lines");
      }
      if (words.size() != 2) throw ParseError(line_no, "expected 'point <name>'");
      const std::string name(words[1]);
      if (!is_valid_name(name)) {
        throw ParseError(line_no, "invalid point name '" + name + "'");
      }
      if (index.count(name)) {
        throw ParseError(line_no, "duplicate point '" + name + "'");
      }
      index.emplace(name, names.size());
      names.push_back(name);
      continue;
    }
    if (head == "dist") {
      state = State::kDists;
      if (words.size() != 4) {
        throw ParseError(line_no, "expected 'dist <p> <q> <num>/<den>'");
      }
      auto lookup = [&](std::string_view w) {
        auto it = index.find(std::string(w));
        if (it == index.end()) {
          throw ParseError(line_no, "unknown point '" + std::string(w) + "'");
        }
        return it->second;
      };
      const std::size_t i = lookup(words[1]);
      const std::size_t j = lookup(words[2]);
      if (i == j) {
        throw ParseError(line_no, "distance from '" + names[i] + "' to itself");
      }
      Rat d;
      try {
        d = Rat::parse(words[3]);
      } catch (const std::exception& e) {
        throw ParseError(line_no, e.what());
      }
      entries.push_back({std::min(i, j), std::max(i, j), d, line_no});
      continue;
    }
    throw ParseError(line_no, "unknown directive '" + std::string(head) + "'");
  }
  if (state == State::kHeader) throw ParseError(0, "missing 'space' header");
  if (state != State::kDone) throw ParseError(0, "missing 'end'");

  const std::size_t n = names.size();
  std::vector<PointId> ids(n);
  for (std::size_t i = 0; i < n; ++i) {
    ids[i] = PointId{static_cast<std::uint32_t>(i)};
  }
  ParsedSpace out{SpaceTable(ids), {}};
  for (std::size_t i = 0; i < n; ++i) out.names.emplace(ids[i], names[i]);

  std::vector<bool> seen(n * n, false);
  for (const Entry& e : entries) {
    if (seen[e.i * n + e.j]) {
      throw ParseError(e.line, "duplicate distance for pair '" + names[e.i] +
                                   "' '" + names[e.j] + "'");
    }
    seen[e.i * n + e.j] = true;
    out.table.set(ids[e.i], ids[e.j], e.d);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!seen[i * n + j]) {
        throw ParseError(0, "missing distance for pair '" + names[i] + "' '" +
                                names[j] + "'");
      }
    }
  }
  return out;
}

std::string point_name(const PointNames& names, PointId p) {
  auto it = names.find(p);
  if (it != names.end()) return it->second;
  return "p" + std::to_string(p.value);
}

std::string serialize_space(const FinSpace& space, const PointNames& names) {
  std::string out = "space\n";
  std::vector<std::string> labels;
  labels.reserve(space.size());
  for (PointId p : space.points()) {
    labels.push_back(point_name(names, p));
    if (!is_valid_name(labels.back())) {
      throw std::invalid_argument("invalid point name '" + labels.back() + "'");
    }
    out += "point " + labels.back() + "\n";
  }
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      dup != sorted.end()) {
    throw std::invalid_argument("duplicate point name '" + *dup + "'");
  }
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) {
      out += "dist " + labels[i] + " " + labels[j] + " " +
             space.distance_at(i, j).to_string() + "\n";
    }
  }
  out += "end\n";
  return out;
}

}  // namespace urysohn
