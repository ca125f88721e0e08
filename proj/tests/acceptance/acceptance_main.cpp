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

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fixtures.hpp"
#include "pidsym/equiv.hpp"
#include "pidsym/explore.hpp"
#include "pidsym/oracle.hpp"
#include "pidsym/repr.hpp"
#include "pidsym/state.hpp"
#include "properties.hpp"

namespace pidsym::acceptance {
namespace {

using fixtures::kGen;
using fixtures::pid;

// Wall-clock budgets, seconds.
constexpr double kFixtureBudget = 1.0;
constexpr double kSoundnessBudget = 300.0;
constexpr double kCleanBudget = 120.0;
constexpr double kCollapseBudget = 120.0;
constexpr double kFanoutBudget = 300.0;
constexpr double kPropertyBudget = 180.0;

constexpr std::size_t kSoundnessMaxStates = 5000;
constexpr std::size_t kSoundnessPidBound = 8;
constexpr std::size_t kCollapseMaxStates = 10000;
constexpr int kFanoutMin = 2;
constexpr int kFanoutMax = 6;
constexpr int kFanoutOracleMax = 4;
constexpr std::size_t kFanoutOraclePidBound = 16;
// Unreduced growth: none(n+1) / none(n) >= n + 1.
// Reduced growth: log(s(n+1) / s(n)) / log((n+1) / n) <= 3.
constexpr double kPolynomialDegree = 3.0;
constexpr std::size_t kMinCheckerPairs = 10000;
constexpr std::uint64_t kPropertySeed = 20260101;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  std::string failed;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failed += " [failed: " + what + "]";
    }
  }
};

StateSpace run(const TNet& net, Mode mode, std::size_t max_states,
               std::size_t oracle_bound = kDefaultOraclePidBound) {
  ExploreOptions o;
  o.mode = mode;
  o.max_states = max_states;
  o.oracle_pid_bound = oracle_bound;
  return explore(net, o);
}

void sibling_offsets(Verdict& v) {
  fixtures::SiblingOffsetQuartet q = fixtures::sibling_offset_quartet();
  std::optional<PidBijection> h = tree_equivalent(q.trees[0], q.trees[1]);
  std::map<Pid, Pid> expected{
      {pid("1"), pid("1")},         {pid("1.1"), pid("1.4")},
      {pid("1.3"), pid("1.7")},     {pid("1.2.1"), pid("1.3.1")},
      {pid("1.2.2"), pid("1.3.2")}, {pid("1.1.1"), pid("1.4.2")},
  };
  v.require(h.has_value(), "T1 ~ T2");
  if (h) {
    v.require(h->forward() == expected, "h = " + h->to_string());
    v.detail << "h = " << h->to_string();
  }
  int rejected = 0;
  for (auto [i, j] : {std::pair{2, 0}, {2, 1}, {3, 0}, {3, 1}, {2, 3}}) {
    bool eq = tree_equivalent(q.trees[i], q.trees[j]).has_value() ||
              tree_equivalent(q.trees[j], q.trees[i]).has_value();
    v.require(!eq, "T" + std::to_string(i + 1) + " !~ T" + std::to_string(j + 1));
    rejected += eq ? 0 : 1;
  }
  v.detail << ", " << rejected << "/5 non-equivalent pairs rejected";
}

void stripping_pairs(Verdict& v) {
  fixtures::StripPair s = fixtures::strip_pair();
  PidTree e1 = represent(s.first, kGen);
  PidTree e2 = represent(s.second, kGen);
  PidTree s1 = stripped_form(s.first, kGen);
  PidTree s2 = stripped_form(s.second, kGen);
  v.require(e1 == s.first_expanded && e2 == s.second_expanded, "expanded trees as drawn");
  v.require(s1 == s.first_stripped && s2 == s.second_stripped, "stripped trees as drawn");
  bool expanded_eq = tree_equivalent(e1, e2).has_value();
  bool stripped_eq = tree_equivalent(s1, s2).has_value();
  v.require(!expanded_eq, "expanded pair non-equivalent");
  v.require(stripped_eq, "stripped pair equivalent");
  v.detail << "expanded " << (expanded_eq ? "equivalent" : "non-equivalent") << ", stripped "
           << (stripped_eq ? "equivalent" : "non-equivalent");
  if (!stripped_eq) {
    bool oracle = state_equivalent(s.first, s.second, kGen).has_value();
    v.detail << " (oracle: " << (oracle ? "equivalent" : "non-equivalent") << ")";
  }

  fixtures::IncompletePair p = fixtures::incomplete_pair();
  PidTree i1 = stripped_form(p.first, kGen);
  PidTree i2 = stripped_form(p.second, kGen);
  v.require(i1 == p.first_stripped && i2 == p.second_stripped, "incomplete pair trees as drawn");
  bool trees_eq = tree_equivalent(i1, i2).has_value();
  std::optional<PidBijection> h = state_equivalent(p.first, p.second, kGen);
  v.require(!trees_eq, "incomplete pair trees non-equivalent");
  v.require(h.has_value(), "incomplete pair states equivalent");
  v.detail << "; incomplete pair: trees " << (trees_eq ? "equivalent" : "non-equivalent")
           << ", oracle " << (h ? h->to_string() : std::string("none"));
}

void representations(Verdict& v) {
  fixtures::TwoRepresentations f = fixtures::two_representations();
  bool a = is_representation(f.expanded, f.marking, kGen);
  bool b = is_representation(f.merged, f.marking, kGen);
  v.require(a, "expanded tree represents the marking");
  v.require(b, "merged tree represents the marking");
  v.require(expand(f.merged) == f.expanded, "expand(merged) = expanded");
  v.require(represent(f.marking, kGen) == f.expanded, "represent = expanded");
  v.detail << "both trees represent the marking: " << (a && b ? "yes" : "no");
}

void soundness(Verdict& v) {
  std::size_t audited = 0;
  std::size_t skipped = 0;
  std::size_t failures = 0;
  for (const std::string& file : props::bundled_models()) {
    TNet net = props::load_model(file);
    for (Mode mode : {Mode::kStripped, Mode::kExpanded}) {
      ExploreOptions o;
      o.mode = mode;
      o.max_states = kSoundnessMaxStates;
      o.validate = true;
      o.audit_pid_bound = kSoundnessPidBound;
      StateSpace s = explore(net, o);
      audited += s.merges_audited;
      skipped += s.audit_skipped;
      failures += s.audit_failures;
      for (const std::string& f : s.failures) v.detail << " [" << file << ": " << f << "]";
    }
  }
  v.require(failures == 0, "zero audit failures");
  v.require(audited > 0, "some merge audited");
  v.detail << audited << " merges audited, " << skipped << " above the pid bound, " << failures
           << " failures";
}

void clean_completeness(Verdict& v) {
  TNet net = props::load_model("clean_join.tnet");
  StateSpace stripped = run(net, Mode::kStripped, kCollapseMaxStates);
  StateSpace oracle = run(net, Mode::kOracle, kCollapseMaxStates);
  StateSpace concrete = run(net, Mode::kNone, kCollapseMaxStates);
  std::size_t unclean = 0;
  for (const StateSpace* s : {&stripped, &oracle, &concrete}) {
    for (const Marking& m : s->states) unclean += is_clean(m, net.generator()) ? 0 : 1;
  }
  v.require(!stripped.truncated && !oracle.truncated, "finite");
  v.require(stripped.states.size() == oracle.states.size(), "stripped = oracle");
  v.require(unclean == 0, "every reachable marking clean");
  v.detail << "stripped " << stripped.states.size() << ", oracle " << oracle.states.size() << ", "
           << concrete.states.size() << " concrete markings checked, " << unclean << " unclean";
}

void collapse(Verdict& v) {
  TNet net = props::load_model("spawn_reap.tnet");
  StateSpace none = run(net, Mode::kNone, kCollapseMaxStates);
  StateSpace stripped = run(net, Mode::kStripped, kCollapseMaxStates);
  StateSpace oracle = run(net, Mode::kOracle, kCollapseMaxStates);
  v.require(none.truncated && none.states.size() == kCollapseMaxStates, "none truncates");
  v.require(!stripped.truncated && !oracle.truncated, "reduced runs finish");
  v.require(stripped.states.size() == oracle.states.size(), "stripped = oracle");
  v.detail << "none " << none.states.size() << (none.truncated ? " (truncated)" : "")
           << ", stripped " << stripped.states.size() << ", oracle " << oracle.states.size();
}

void fanout(Verdict& v) {
  std::vector<double> none;
  std::vector<double> stripped;
  std::ostringstream table;
  for (int n = kFanoutMin; n <= kFanoutMax; ++n) {
    TNet net = props::load_model("fanout_n.tnet", {{"N", n}});
    StateSpace a = run(net, Mode::kNone, ExploreOptions().max_states);
    StateSpace b = run(net, Mode::kStripped, ExploreOptions().max_states);
    v.require(!a.truncated && !b.truncated, "n=" + std::to_string(n) + " finishes");
    none.push_back(static_cast<double>(a.states.size()));
    stripped.push_back(static_cast<double>(b.states.size()));
    table << (n == kFanoutMin ? "" : " ") << "n=" << n << ": none " << a.states.size() << ", stripped " << b.states.size();
    if (n <= kFanoutOracleMax) {
      StateSpace c = run(net, Mode::kOracle, ExploreOptions().max_states, kFanoutOraclePidBound);
      v.require(c.states.size() == b.states.size(), "stripped = oracle at n=" + std::to_string(n));
      table << ", oracle " << c.states.size();
    }
    table << ";";
  }
  for (std::size_t i = 0; i + 1 < none.size(); ++i) {
    double n = kFanoutMin + static_cast<double>(i);
    v.require(none[i + 1] / none[i] >= n + 1, "factorial growth at n=" + std::to_string(int(n)));
    double degree = std::log(stripped[i + 1] / stripped[i]) / std::log((n + 1) / n);
    v.require(degree <= kPolynomialDegree, "polynomial growth at n=" + std::to_string(int(n)));
  }
  v.detail << table.str();
}

void properties(Verdict& v) {
  std::vector<props::PropertyResult> results = props::run_all(kPropertySeed, 1);
  std::size_t cases = 0;
  for (const props::PropertyResult& r : results) {
    cases += r.cases;
    v.require(r.ok(), r.name + (r.counterexamples.empty() ? "" : ": " + r.counterexamples[0]));
    if (r.name == "checker and signature coincide") {
      v.require(r.cases >= kMinCheckerPairs, "at least 10000 tree pairs");
    }
  }
  v.detail << results.size() << " suites, " << cases << " cases";
}

struct Criterion {
  int id;
  const char* title;
  double budget;
  std::function<void(Verdict&)> body;
};

}  // namespace
}  // namespace pidsym::acceptance

int main(int argc, char** argv) {
  using namespace pidsym::acceptance;
  CLI::App app("pidsym acceptance suite");
  int only = 0;
  app.add_option("--only", only, "run a single criterion (1-8)")->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);

  std::vector<Criterion> criteria{
      {1, "sibling-offset fixture", kFixtureBudget, sibling_offsets},
      {2, "stripping and incompleteness fixtures", kFixtureBudget, stripping_pairs},
      {3, "two representations fixture", kFixtureBudget, representations},
      {4, "soundness audit on bundled models", kSoundnessBudget, soundness},
      {5, "completeness on clean markings", kCleanBudget, clean_completeness},
      {6, "infinite-to-finite collapse", kCollapseBudget, collapse},
      {7, "interleaving collapse in fanout", kFanoutBudget, fanout},
      {8, "property suites", kPropertyBudget, properties},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Verdict v;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(secs < c.budget, "time budget");
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs of %.0fs", secs, c.budget);
    std::cout << "criterion " << c.id << ": " << (v.pass ? "PASS" : "FAIL") << " " << c.title
              << " (" << timing << ") " << v.detail.str() << v.failed << std::endl;
    all = all && v.pass;
  }
  return all ? 0 : 1;
}
