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

#include "urysohn/witness.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace urysohn {

WitnessConfig build_witness(const FinSpace& support, std::int64_t n,
                            std::int64_t m) {
  if (support.empty()) {
    throw std::invalid_argument("witness support must be nonempty");
  }
  if (n < 1 || m < 1) {
    throw std::invalid_argument("witness needs n >= 1 and m >= 1");
  }
  // 3k + 1 chain points must fit comfortably in a PointId.
  if (n > (std::int64_t{1} << 20) / m) {
    throw std::invalid_argument("witness parameters too large");
  }

  WitnessConfig w;
  w.support = support;
  w.n = n;
  w.m = m;
  w.k = n * m;
  w.far = diameter(support) + Rat(4);

  const std::size_t nb = support.size();
  const std::size_t nc = static_cast<std::size_t>(3 * w.k + 1);
  const std::size_t total = nb + nc;
  std::vector<PointId> pts = support.points();
  PointId next = support.next_id();
  for (std::size_t i = 0; i < nc; ++i) {
    w.chain.push_back(next);
    pts.push_back(next);
    next.value += 1;
  }

  std::vector<Rat> dist(total * total);
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      dist[i * total + j] = support.distance_at(i, j);
    }
    for (std::size_t c = 0; c < nc; ++c) {
      dist[i * total + nb + c] = w.far;
      dist[(nb + c) * total + i] = w.far;
    }
  }
  for (std::size_t a = 0; a < nc; ++a) {
    for (std::size_t c = 0; c < nc; ++c) {
      const auto gap = static_cast<std::int64_t>(a > c ? a - c : c - a);
      dist[(nb + a) * total + nb + c] = Rat(gap, w.k);
    }
  }
  w.space = FinSpace::assume_valid(std::move(pts), std::move(dist));

  // Chain spread is 3 <= 2 (D + 4), so this never fires; checked anyway.
  ValidationReport report = validate(w.space);
  if (!report.valid()) {
    throw std::logic_error("witness configuration violates the metric axioms: " +
                           describe(report.violations.front(), [](PointId p) {
                             return "#" + std::to_string(p.value);
                           }));
  }
  return w;
}

PartialIso shift_iso(const WitnessConfig& w) {
  PartialIso p;
  for (PointId b : w.support.points()) {
    p.dom.push_back(b);
    p.cod.push_back(b);
  }
  for (std::size_t i = 0; i + 1 < w.chain.size(); ++i) {
    p.dom.push_back(w.chain[i]);
    p.cod.push_back(w.chain[i + 1]);
  }
  return p;
}

RefinementTrace make_trace(const WitnessConfig& w,
                           std::vector<std::int64_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (std::int64_t i : members) {
    if (i < 0 || i > w.last_index()) {
      throw std::out_of_range("trace index " + std::to_string(i) +
                              " outside 0.." + std::to_string(w.last_index()));
    }
  }
  return RefinementTrace{std::move(members)};
}

bool admissible(const WitnessConfig& w, const RefinementTrace& t) {
  const std::int64_t top = w.last_index();
  auto has = [&](std::int64_t i) {
    return std::binary_search(t.members.begin(), t.members.end(), i);
  };
  if (!has(top)) return false;
  for (std::int64_t i = top - w.n + 1; i <= top; ++i) {
    if (!has(i)) return false;
  }
  return std::all_of(t.members.begin(), t.members.end(), [&](std::int64_t i) {
    return i >= 2 * w.k && i <= top;
  });
}

std::int64_t min_index(const WitnessConfig& w, const RefinementTrace& t) {
  if (!admissible(w, t)) {
    throw std::invalid_argument("trace is not admissible");
  }
  const std::int64_t least = t.members.front();
  if (least < 2 * w.k || least > w.last_index() - w.n + 1) {
    throw std::logic_error("least member " + std::to_string(least) +
                           " outside [2k, 3k-n+1]");
  }
  return least;
}

std::vector<Membership> shifted_trace(const WitnessConfig& w,
                                      const RefinementTrace& t,
                                      std::int64_t j) {
  if (j < 0 || j >= w.n) {
    throw std::out_of_range("shift " + std::to_string(j) + " outside 0.." +
                            std::to_string(w.n - 1));
  }
  std::vector<Membership> out(static_cast<std::size_t>(w.last_index() + 1),
                              Membership::kUnknown);
  for (std::int64_t i = j; i <= w.last_index(); ++i) {
    const bool in =
        std::binary_search(t.members.begin(), t.members.end(), i - j);
    out[static_cast<std::size_t>(i)] = in ? Membership::kIn : Membership::kOut;
  }
  return out;
}

InjectionReport verify_injection(const WitnessConfig& w,
                                 const RefinementTrace& t) {
  if (!admissible(w, t)) {
    throw std::invalid_argument("trace is not admissible");
  }
  InjectionReport report;
  const std::int64_t least = t.members.front();
  report.min_index = least;
  report.min_index_in_range =
      least >= 2 * w.k && least <= w.last_index() - w.n + 1;

  bool all_ok = report.min_index_in_range;
  for (std::int64_t j = 0; j < w.n; ++j) {
    ShiftCheck check;
    check.j = j;
    check.trace = shifted_trace(w, t, j);
    check.apex_in = check.trace.back() == Membership::kIn;
    check.determined = true;
    for (std::int64_t i = w.k; i <= least + j; ++i) {
      const Membership mem = check.trace[static_cast<std::size_t>(i)];
      if (mem == Membership::kUnknown) check.determined = false;
      if (mem == Membership::kIn) check.pattern.push_back(i);
    }
    check.pattern_ok = check.determined &&
                       check.pattern == std::vector<std::int64_t>{least + j};
    all_ok = all_ok && check.apex_in && check.pattern_ok;
    report.shifts.push_back(std::move(check));
  }

  // Distinctness two ways: the certified first member at or above k differs
  // (L + j), and the traces differ somewhere both are determined.
  report.pairwise_distinct = true;
  for (std::size_t a = 0; a < report.shifts.size(); ++a) {
    for (std::size_t b = a + 1; b < report.shifts.size(); ++b) {
      const auto& ta = report.shifts[a];
      const auto& tb = report.shifts[b];
      const bool certified = ta.pattern_ok && tb.pattern_ok &&
                             ta.pattern.front() != tb.pattern.front();
      bool differ = false;
      for (std::size_t i = static_cast<std::size_t>(tb.j);
           i < ta.trace.size() && !differ; ++i) {
        differ = ta.trace[i] != tb.trace[i];
      }
      if (!certified || !differ) report.pairwise_distinct = false;
    }
  }
  report.injective = all_ok && report.pairwise_distinct;
  return report;
}

ExhaustSummary exhaust_all_traces(const WitnessConfig& w) {
  const std::int64_t lo = 2 * w.k;
  const std::int64_t tail = w.last_index() - w.n + 1;
  const std::int64_t free = tail - lo;  // k + 1 - n optional indices
  if (free >= 40) {
    throw std::invalid_argument("too many traces to enumerate");
  }
  ExhaustSummary summary;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free); ++mask) {
    std::vector<std::int64_t> members;
    for (std::int64_t i = 0; i < free; ++i) {
      if (mask & (std::uint64_t{1} << i)) members.push_back(lo + i);
    }
    for (std::int64_t i = tail; i <= w.last_index(); ++i) members.push_back(i);
    const RefinementTrace t = make_trace(w, std::move(members));
    const InjectionReport r = verify_injection(w, t);
    ++summary.checked;
    if (r.injective) ++summary.passed;
    const bool patterns =
        std::all_of(r.shifts.begin(), r.shifts.end(),
                    [](const ShiftCheck& s) { return s.pattern_ok; });
    if (!r.min_index_in_range || !patterns) summary.bounds_held = false;
  }
  return summary;
}

}  // namespace urysohn
