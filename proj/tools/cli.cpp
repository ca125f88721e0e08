// Copyright 2026 The pidsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pidsym/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pidsym/equiv.hpp"
#include "pidsym/explore.hpp"
#include "pidsym/model_format.hpp"
#include "pidsym/pid_tree.hpp"
#include "pidsym/repr.hpp"

namespace pidsym {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

Defines parse_defines(const std::vector<std::string>& items) {
  Defines out;
  for (const std::string& item : items) {
    std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error("-D expects NAME=INT, got '" + item + "'");
    }
    try {
      std::size_t used = 0;
      std::string value = item.substr(eq + 1);
      std::int64_t v = std::stoll(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      out[item.substr(0, eq)] = v;
    } catch (const std::exception&) {
      throw Error("-D expects NAME=INT, got '" + item + "'");
    }
  }
  return out;
}

struct Common {
  std::string model;
  std::vector<std::string> defines;
};

struct ExploreArgs {
  std::string mode = "stripped";
  std::size_t max_states = 100000;
  std::size_t max_depth = 0;
  bool validate = false;
  std::size_t audit_pid_bound = 8;
  std::size_t oracle_pid_bound = kDefaultOraclePidBound;
  std::string dot;
  std::string json;
  bool fail_on_truncate = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("model", c.model, "model file")->required();
  cmd->add_option("-D,--define", c.defines, "override a define, NAME=INT");
}

void add_explore_options(CLI::App* cmd, ExploreArgs& a) {
  cmd->add_option("--max-states", a.max_states)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--max-depth", a.max_depth, "0 means unbounded");
  cmd->add_flag("--validate", a.validate,
                "audit merges with the oracle and re-fire every edge");
  cmd->add_option("--audit-pid-bound", a.audit_pid_bound)
      ->capture_default_str();
  cmd->add_option("--oracle-pid-bound", a.oracle_pid_bound)
      ->capture_default_str();
  cmd->add_option("--json", a.json, "write the JSON report here");
  cmd->add_flag("--fail-on-truncate", a.fail_on_truncate, "exit 2 if truncated");
}

ExploreOptions to_options(const ExploreArgs& a) {
  ExploreOptions o;
  o.mode = parse_mode(a.mode);
  o.max_states = a.max_states;
  if (a.max_depth > 0) o.max_depth = a.max_depth;
  o.validate = a.validate;
  o.audit_pid_bound = a.audit_pid_bound;
  o.oracle_pid_bound = a.oracle_pid_bound;
  return o;
}

TNet load(const Common& c) {
  return parse_model(read_file(c.model), parse_defines(c.defines));
}

int cmd_check(const Common& c, std::ostream& out, std::ostream& err) {
  TNet net = parse_model_unchecked(read_file(c.model), parse_defines(c.defines));
  std::vector<Violation> violations = validate(net);
  for (const Violation& v : violations) err << v.to_string() << "\n";
  if (!violations.empty()) {
    err << c.model << ": " << violations.size() << " violation(s)\n";
    return kExitError;
  }
  out << c.model << ": net " << net.name() << ", " << net.places().size()
      << " places, " << net.transitions().size() << " transitions, ok\n";
  return kExitOk;
}

int cmd_explore(const Common& c, const ExploreArgs& a, std::ostream& out,
                std::ostream& err) {
  TNet net = load(c);
  StateSpace space = explore(net, to_options(a));
  out << net.name() << " [" << mode_name(space.mode) << "]: "
      << space.states.size() << " states, " << space.edges.size()
      << " edges, depth " << space.max_depth_reached
      << (space.truncated ? ", truncated" : "") << "\n";
  if (a.validate) {
    out << "audit: " << space.merges_audited << " merges checked, "
        << space.audit_skipped << " skipped, " << space.audit_failures
        << " failures\n";
    for (const std::string& f : space.failures) err << "audit failure: " << f << "\n";
  }
  if (!a.json.empty()) write_file(a.json, to_json(space) + "\n");
  if (!a.dot.empty()) write_file(a.dot, to_dot(net, space));
  if (space.audit_failures > 0) return kExitError;
  if (space.truncated && a.fail_on_truncate) return kExitTruncated;
  return kExitOk;
}

int cmd_compare(const Common& c, const ExploreArgs& a, std::ostream& out) {
  TNet net = load(c);
  ExploreArgs copy = a;
  copy.mode = "none";
  Report report = compare_reductions(net, to_options(copy));
  out << to_text(report);
  if (!a.json.empty()) write_file(a.json, to_json(report) + "\n");
  bool failed = std::any_of(report.rows.begin(), report.rows.end(),
                            [](const ModeReport& r) { return r.audit_failures > 0; });
  if (failed) return kExitError;
  bool truncated = std::any_of(report.rows.begin(), report.rows.end(),
                               [](const ModeReport& r) { return r.truncated; });
  if (truncated && a.fail_on_truncate) return kExitTruncated;
  return kExitOk;
}

int cmd_canonize(const Common& c, const std::string& marking_file,
                 std::ostream& out) {
  TNet net = load(c);
  Marking m = marking_file.empty() ? net.initial()
                                   : parse_marking(read_file(marking_file), net);
  PidTree expanded = represent(m, net.generator());
  PidTree stripped = stripped_form(m, net.generator());
  out << to_dot(expanded, "expanded");
  out << to_dot(stripped, "stripped");
  out << "// expanded signature " << signature(expanded).hex() << "\n";
  out << "// stripped signature " << signature(stripped).hex() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Reachability for t-nets with pid-tree symmetry reduction",
               "pidsym"};
  app.require_subcommand(1);

  Common common;
  ExploreArgs ea;
  std::string marking_file;

  CLI::App* check = app.add_subcommand("check", "validate a model");
  add_common(check, common);

  CLI::App* explore_cmd = app.add_subcommand("explore", "explore the state space");
  add_common(explore_cmd, common);
  explore_cmd->add_option("--mode", ea.mode, "none, stripped, expanded or oracle")
      ->check(CLI::IsMember({"none", "stripped", "expanded", "oracle"}))
      ->capture_default_str();
  add_explore_options(explore_cmd, ea);
  explore_cmd->add_option("--dot", ea.dot, "write the quotient graph here");

  CLI::App* compare = app.add_subcommand("compare", "explore under every mode");
  add_common(compare, common);
  add_explore_options(compare, ea);

  CLI::App* canonize = app.add_subcommand(
      "canonize", "print the pid-trees and signatures of a marking");
  add_common(canonize, common);
  canonize->add_option("--marking", marking_file,
                       "marking file (default: the initial marking)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (check->parsed()) return cmd_check(common, out, err);
    if (explore_cmd->parsed()) return cmd_explore(common, ea, out, err);
    if (compare->parsed()) return cmd_compare(common, ea, out);
    if (canonize->parsed()) return cmd_canonize(common, marking_file, out);
  } catch (const ValidationError& e) {
    err << common.model << ": " << e.what() << "\n";
    return kExitError;
  } catch (const SyntaxError& e) {
    err << common.model << ":" << e.what() << "\n";
    return kExitError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace pidsym
