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

#include "cli.h"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "urysohn/amalgam.h"
#include "urysohn/limit.h"
#include "urysohn/space.h"
#include "urysohn/space_io.h"
#include "urysohn/witness.h"

namespace urysohn::cli {
namespace {

// Anything that should end the command with exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
  if (!out) throw UsageError("failed writing '" + path + "'");
}

ParsedSpace load_table(const std::string& path) {
  try {
    return parse_space(read_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

struct NamedSpace {
  FinSpace space;
  PointNames names;
};

NamedSpace load_space(const std::string& path) {
  ParsedSpace parsed = load_table(path);
  try {
    return {FinSpace::from_table(parsed.table), std::move(parsed.names)};
  } catch (const InvalidSpace& e) {
    throw UsageError(path + ": " + e.what());
  }
}

template <typename T>
std::vector<T> split_list(const std::string& text, T (*convert)(const std::string&)) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw UsageError("empty entry in list '" + text + "'");
    out.push_back(convert(item));
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

Rat to_rat(const std::string& s) {
  try {
    return Rat::parse(s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

std::int64_t to_index(const std::string& s) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || used == 0) {
    throw UsageError("malformed index '" + s + "'");
  }
  return v;
}

// Fills in names for points that have none, avoiding collisions.
void name_new_points(const FinSpace& space, PointNames& names,
                     const std::string& prefix,
                     const std::vector<PointId>& order = {}) {
  std::set<std::string> used;
  for (const auto& [id, name] : names) used.insert(name);
  const std::vector<PointId>& pts = order.empty() ? space.points() : order;
  std::size_t counter = 0;
  for (PointId p : pts) {
    if (names.count(p)) continue;
    std::string name =
        prefix + std::to_string(order.empty() ? p.value : counter);
    while (used.count(name)) name = "_" + name;
    used.insert(name);
    names.emplace(p, name);
    ++counter;
  }
}

const char* membership_char(Membership m) {
  switch (m) {
    case Membership::kIn: return "I";
    case Membership::kOut: return ".";
    case Membership::kUnknown: return "?";
  }
  return "?";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_validate(const std::string& file, std::ostream& out) {
  ParsedSpace parsed = load_table(file);
  ValidationReport report = validate(parsed.table);
  if (report.valid()) {
    out << "valid\n";
    return kExitPass;
  }
  for (const Violation& v : report.violations) {
    out << describe(v, [&](PointId p) { return point_name(parsed.names, p); })
        << '\n';
  }
  return kExitFail;
}

int cmd_iso(const std::string& f1, const std::string& f2, std::ostream& out) {
  NamedSpace x = load_space(f1);
  NamedSpace y = load_space(f2);
  auto iso = canonical_iso(x.space, y.space);
  if (!iso) {
    out << "none\n";
    return kExitFail;
  }
  out << "iso\n";
  for (std::size_t i = 0; i < iso->size(); ++i) {
    out << point_name(x.names, iso->source[i]) << " -> "
        << point_name(y.names, iso->target[i]) << '\n';
  }
  return kExitPass;
}

int cmd_embed(const std::string& f1, const std::string& f2, bool all,
              std::ostream& out) {
  NamedSpace x = load_space(f1);
  NamedSpace y = load_space(f2);
  EmbeddingStream stream(x.space, y.space);
  std::size_t count = 0;
  while (auto e = stream.next()) {
    ++count;
    out << "embedding";
    for (std::size_t i = 0; i < e->size(); ++i) {
      out << ' ' << point_name(x.names, e->source[i]) << "->"
          << point_name(y.names, e->target[i]);
    }
    out << '\n';
    if (!all) break;
  }
  if (count == 0) {
    out << "none\n";
    return kExitFail;
  }
  if (all) out << "count " << count << '\n';
  return kExitPass;
}

int cmd_fraisse(std::size_t max_size, const std::string& grid_text,
                std::ostream& out) {
  const std::vector<Rat> grid = split_list<Rat>(grid_text, to_rat);
  FraisseReport r;
  try {
    r = check_fraisse_properties(max_size, grid);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << "max-size " << r.max_size << '\n';
  out << "grid";
  for (const Rat& q : r.grid) out << ' ' << q;
  out << '\n';
  out << "structures";
  for (std::size_t s = 1; s < r.structures_by_size.size(); ++s) {
    out << ' ' << s << ':' << r.structures_by_size[s];
  }
  out << '\n';
  auto line = [&](const char* name, std::size_t checked,
                  const std::optional<std::string>& cx) {
    out << name << " checked " << checked << ' '
        << (cx ? "counterexample " + *cx : std::string("ok")) << '\n';
  };
  line("hp", r.hp_checked, r.hp_counterexample);
  line("jep", r.jep_checked, r.jep_counterexample);
  line("ap", r.ap_checked, r.ap_counterexample);
  out << "result " << (r.all_hold() ? "pass" : "fail") << '\n';
  return r.all_hold() ? kExitPass : kExitFail;
}

int cmd_limit_grow(const std::string& seed, std::size_t steps,
                   const std::string& out_file, std::ostream& out) {
  NamedSpace start;
  if (seed != "empty") start = load_space(seed);
  LimitBuilder builder(start.space);
  builder.grow(steps);
  PointNames names = start.names;
  name_new_points(builder.stage(), names, "p");
  write_file(out_file, serialize_space(builder.stage(), names));
  out << "stage " << builder.stage().size() << " points\n";
  return kExitPass;
}

WitnessConfig load_witness(const std::string& support, std::int64_t n,
                           std::int64_t m, PointNames& names) {
  NamedSpace b = load_space(support);
  try {
    WitnessConfig w = build_witness(b.space, n, m);
    names = b.names;
    name_new_points(w.space, names, "a", w.chain);
    return w;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_witness_build(const std::string& support, std::int64_t n,
                      std::int64_t m, const std::string& out_file,
                      std::ostream& out) {
  PointNames names;
  WitnessConfig w = load_witness(support, n, m, names);
  write_file(out_file, serialize_space(w.space, names));
  out << "k " << w.k << '\n';
  out << "far " << w.far << '\n';
  out << "points " << w.space.size() << '\n';
  return kExitPass;
}

int cmd_witness_verify(const std::string& support, std::int64_t n,
                       std::int64_t m, const std::string& trace_text,
                       std::ostream& out) {
  PointNames names;
  WitnessConfig w = load_witness(support, n, m, names);
  RefinementTrace trace;
  try {
    trace = make_trace(w, split_list<std::int64_t>(trace_text, to_index));
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  if (!admissible(w, trace)) throw UsageError("trace is not admissible");
  InjectionReport r = verify_injection(w, trace);
  out << "L " << r.min_index << " in [" << 2 * w.k << ", "
      << w.last_index() - w.n + 1 << "]: " << yes_no(r.min_index_in_range)
      << '\n';
  for (const ShiftCheck& s : r.shifts) {
    out << "shift " << s.j << ' ';
    for (Membership mem : s.trace) out << membership_char(mem);
    out << " apex " << yes_no(s.apex_in) << " pattern {";
    for (std::size_t i = 0; i < s.pattern.size(); ++i) {
      out << (i ? "," : "") << s.pattern[i];
    }
    out << "} " << (s.pattern_ok ? "ok" : "fail") << '\n';
  }
  out << "distinct " << yes_no(r.pairwise_distinct) << '\n';
  out << "injective " << yes_no(r.injective) << '\n';
  return r.injective ? kExitPass : kExitFail;
}

int cmd_witness_exhaust(const std::string& support, std::int64_t n,
                        std::int64_t m, std::ostream& out) {
  PointNames names;
  WitnessConfig w = load_witness(support, n, m, names);
  ExhaustSummary s;
  try {
    s = exhaust_all_traces(w);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << "checked " << s.checked << ", passed " << s.passed << '\n';
  return s.all_passed() ? kExitPass : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Finite ordered rational metric spaces: validation, "
               "amalgamation, limit stages and the ball-cover witness",
               "urysohn"};
  app.require_subcommand(1);

  std::string file1;
  std::string file2;
  bool all = false;
  auto* validate_cmd = app.add_subcommand("validate", "Check the metric and order axioms");
  validate_cmd->add_option("file", file1)->required();

  auto* iso_cmd = app.add_subcommand("iso", "Order isomorphism between two spaces");
  iso_cmd->add_option("first", file1)->required();
  iso_cmd->add_option("second", file2)->required();

  auto* embed_cmd = app.add_subcommand("embed", "Embeddings of one space into another");
  embed_cmd->add_option("source", file1)->required();
  embed_cmd->add_option("target", file2)->required();
  embed_cmd->add_flag("--all", all, "List every embedding");

  std::size_t max_size = 0;
  std::string grid;
  auto* fraisse_cmd = app.add_subcommand("fraisse-check", "Bounded HP/JEP/AP check");
  fraisse_cmd->add_option("--max-size", max_size)->required();
  fraisse_cmd->add_option("--grid", grid)->required();

  std::string seed;
  std::size_t steps = 0;
  std::string out_file;
  auto* limit_cmd = app.add_subcommand("limit", "Finite limit stages");
  limit_cmd->require_subcommand(1);
  auto* grow_cmd = limit_cmd->add_subcommand("grow", "Grow a stage from a seed");
  grow_cmd->add_option("--seed", seed, "Seed file or 'empty'")->required();
  grow_cmd->add_option("--steps", steps)->required();
  grow_cmd->add_option("--out", out_file)->required();

  std::string support;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::string trace;
  auto* witness_cmd = app.add_subcommand("witness", "Ball-cover witness configuration");
  witness_cmd->require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--support", support)->required();
    sub->add_option("--n", n)->required();
    sub->add_option("--m", m)->required();
  };
  auto* build_cmd = witness_cmd->add_subcommand("build", "Write the configuration");
  add_common(build_cmd);
  build_cmd->add_option("--out", out_file)->required();
  auto* verify_cmd = witness_cmd->add_subcommand("verify", "Check one trace");
  add_common(verify_cmd);
  verify_cmd->add_option("--trace", trace)->required();
  auto* exhaust_cmd = witness_cmd->add_subcommand("exhaust", "Check every trace");
  add_common(exhaust_cmd);

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("urysohn");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(file1, out);
    if (iso_cmd->parsed()) return cmd_iso(file1, file2, out);
    if (embed_cmd->parsed()) return cmd_embed(file1, file2, all, out);
    if (fraisse_cmd->parsed()) return cmd_fraisse(max_size, grid, out);
    if (grow_cmd->parsed()) return cmd_limit_grow(seed, steps, out_file, out);
    if (build_cmd->parsed()) {
      return cmd_witness_build(support, n, m, out_file, out);
    }
    if (verify_cmd->parsed()) {
      return cmd_witness_verify(support, n, m, trace, out);
    }
    if (exhaust_cmd->parsed()) return cmd_witness_exhaust(support, n, m, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace urysohn::cli
