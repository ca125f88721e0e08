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

#include "properties.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "generators.hpp"
#include "pidsym/equiv.hpp"
#include "pidsym/pid.hpp"
#include "pidsym/pid_tree.hpp"
#include "pidsym/repr.hpp"
#include "pidsym/state.hpp"

#ifndef PIDSYM_MODELS_DIR
#error "PIDSYM_MODELS_DIR must point at the bundled models"
#endif

namespace pidsym::props {

void PropertyResult::fail(std::string what) {
  if (counterexamples.size() < 5) counterexamples.push_back(std::move(what));
}

TNet load_model(const std::string& file, const Defines& defines) {
  std::ifstream in(std::string(PIDSYM_MODELS_DIR) + "/" + file);
  if (!in) throw Error("missing model " + file);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str(), defines);
}

std::vector<std::string> bundled_models() {
  return {"spawn_reap.tnet", "fanout_n.tnet", "clean_join.tnet", "ring.tnet"};
}

namespace {

std::string show(const Pid& p) { return p.to_string(); }

std::vector<Marking> sample_markings(std::uint64_t seed, std::size_t walks) {
  gen::Rng rng(seed);
  std::vector<TNet> nets;
  for (const std::string& f : bundled_models()) nets.push_back(load_model(f));
  nets.push_back(parse_model(fixtures::orphan_model()));
  std::vector<Marking> out;
  for (std::size_t w = 0; w < walks; ++w) {
    const TNet& net = nets[w % nets.size()];
    for (Marking& m : gen::random_walk(net, rng, 40)) out.push_back(std::move(m));
  }
  return out;
}

// Markings are taken from the bundled models, all of which name their
// generator place "gen".
constexpr std::string_view kGen = "gen";

std::set<Pid> closure(const std::set<Pid>& ps) {
  std::set<Pid> out{Pid()};
  for (const Pid& p : ps) {
    std::set<Pid> sub = subpids(p);
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

bool subset(const std::set<Pid>& a, const std::set<Pid>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

PidTree prune(const PidTree& t, gen::Rng& rng) {
  Marking m;
  for (const auto& [place, bag] : t.marking().places()) {
    for (const auto& [token, n] : bag) {
      std::size_t keep = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n)));
      if (keep > 0) m.add(place, token, keep);
    }
  }
  std::vector<PidTree::Edge> edges;
  for (const PidTree::Edge& e : t.children()) {
    if (rng.chance(0.75)) edges.push_back({e.fragment, prune(e.tree, rng)});
  }
  return PidTree(std::move(m), std::move(edges));
}

PidTree shuffle(const PidTree& t, std::uint64_t salt) {
  return order_by(t, [salt](const PidTree::Edge& a, const PidTree::Edge& b) {
    return (a.fragment.hash() ^ salt) < (b.fragment.hash() ^ salt);
  });
}

}  // namespace

PropertyResult pid_laws(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"pid order, relation and monoid laws", 0, {}, {}};
  gen::Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i, ++r.cases) {
    Pid p = gen::random_pid(rng, 4, 3);
    Pid q = gen::random_pid(rng, 4, 3);
    Pid s = gen::random_pid(rng, 4, 3);
    std::string where = show(p) + ", " + show(q) + ", " + show(s);
    if (((p <=> q) == 0) != (p == q)) r.fail("antisymmetry " + where);
    if ((p < q) != (q > p)) r.fail("converse " + where);
    if (p < q && q < s && !(p < s)) r.fail("transitivity " + where);
    if (!(p < q || q < p || p == q)) r.fail("totality " + where);
    if (p.length() < q.length() && !(p < q)) r.fail("length first " + where);
    if (is_child(p, q) && !is_ancestor(p, q)) r.fail("child implies ancestor " + where);
    if (is_next_sibling(p, q) && !is_elder_sibling(p, q)) {
      r.fail("next sibling implies elder sibling " + where);
    }
    if (!p.empty()) {
      std::set<Pid> sub = subpids(q);
      sub.erase(q);
      if (is_ancestor(p, q) != sub.contains(p)) r.fail("ancestor vs subpids " + where);
    }
    if (concat(concat(p, q), s) != concat(p, concat(q, s))) r.fail("associativity " + where);
    if (concat(Pid(), p) != p || concat(p, Pid()) != p) r.fail("identity " + where);
    if (concat(p, q).length() != p.length() + q.length()) r.fail("length " + where);
    if (subpids(q).size() != q.length()) r.fail("subpid count " + where);
    if (Pid::parse(q.to_string()) != q) r.fail("text round trip " + where);
    if (p.child(2).prefix() != p) r.fail("prefix of child " + where);
  }
  return r;
}

PropertyResult well_formedness(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"well-formedness preservation", 0, {}, {}};
  gen::Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i, ++r.cases) {
    PidTree t = gen::random_tree(rng, 12);
    std::string where = t.to_string();
    if (!check_wf(t) || !is_sibling_ordered(t)) r.fail("generator " + where);
    PidTree shuffled = shuffle(t, rng.engine()());
    if (!check_wf(shuffled)) r.fail("shuffle " + where);
    if (sibling_order(shuffled) != t) r.fail("sibling order undoes shuffle " + where);
    if (sibling_order(t) != t) r.fail("sibling order idempotent " + where);
    PidTree e = expand(t);
    if (!check_wf(e) || !is_sibling_ordered(e)) r.fail("expand " + where);
    if (expand(e) != e) r.fail("expand idempotent " + where);
    PidTree s = strip(e, pids(t));
    if (!check_wf(s) || !is_sibling_ordered(s)) r.fail("strip " + where);
    if (s != t) r.fail("strip of expand " + where);
    if (t.arity() >= 1) {
      std::vector<PidTree::Edge> twice = t.children();
      twice.push_back(t.children().front());
      if (check_wf(PidTree::raw(t.marking(), twice))) r.fail("duplicate fragment " + where);
      std::vector<PidTree::Edge> nested = t.children();
      nested.push_back({t.children().front().fragment.child(7), PidTree()});
      if (check_wf(PidTree::raw(t.marking(), nested))) r.fail("prefix fragment " + where);
    }
  }
  return r;
}

PropertyResult inclusion_order(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"tree inclusion is a partial order", 0, {}, {}};
  gen::Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i, ++r.cases) {
    PidTree t = gen::random_tree(rng, 12);
    PidTree a = prune(t, rng);
    PidTree b = prune(a, rng);
    std::string where = t.to_string();
    if (!includes(t, t)) r.fail("reflexive " + where);
    if (!includes(a, t) || !includes(b, a)) r.fail("pruning " + where);
    if (!includes(b, t)) r.fail("transitive " + where);
    if (includes(t, a) && a != t) r.fail("antisymmetric " + where);
    PidTree u = gen::random_tree(rng, 8);
    if (includes(u, t) && includes(t, u) && u != t) r.fail("antisymmetric " + u.to_string());
  }
  return r;
}

PropertyResult location_bounds(std::uint64_t seed, std::size_t walks) {
  PropertyResult r{"pid bounds of representations", 0, {}, {}};
  for (const Marking& m : sample_markings(seed, walks)) {
    ++r.cases;
    PidSets ps = pids_of(state_of(m, kGen));
    std::set<Pid> lower = ps.pids;
    lower.insert(ps.next_pids.begin(), ps.next_pids.end());
    std::set<Pid> upper = closure(ps.pids);
    upper.insert(ps.next_pids.begin(), ps.next_pids.end());
    std::set<Pid> expanded = pids(represent(m, kGen));
    std::set<Pid> stripped = pids(stripped_form(m, kGen));
    if (!subset(lower, expanded) || !subset(expanded, upper)) r.fail("expanded " + m.to_string());
    if (!subset(lower, stripped) || !subset(stripped, upper)) r.fail("stripped " + m.to_string());
    lower.insert(Pid());
    if (stripped != lower) r.fail("stripped keeps exactly pid ∪ nextpid " + m.to_string());
  }
  return r;
}

PropertyResult reconstruction(std::uint64_t seed, std::size_t walks) {
  PropertyResult r{"markings rebuilt from node markings", 0, {}, {}};
  for (const Marking& m : sample_markings(seed, walks)) {
    ++r.cases;
    for (const PidTree& t : {represent(m, kGen), stripped_form(m, kGen)}) {
      Marking sum;
      for (const Subtree& s : subtrees(t)) {
        sum.merge(s.tree->marking());
        for (const auto& [place, bag] : s.tree->marking().places()) {
          for (const auto& [token, n] : bag) {
            Pid owner = token.front().is_pid() ? token.front().as_pid() : Pid();
            if (owner != s.at) r.fail("token away from its owner " + m.to_string());
          }
        }
      }
      if (sum != m.without(kGen)) r.fail("union of nodes " + m.to_string());
    }
  }
  return r;
}

PropertyResult canonical_forms(std::uint64_t seed, std::size_t walks) {
  PropertyResult r{"expanded and stripped forms", 0, {}, {}};
  gen::Rng rng(seed ^ 0x5bd1e995);
  std::size_t clean = 0;
  std::size_t distinct = 0;
  for (const Marking& m : sample_markings(seed, walks)) {
    ++r.cases;
    clean += is_clean(m, kGen) ? 1 : 0;
    std::string where = m.to_string();
    PidTree e = represent(m, kGen);
    PidTree s = stripped_form(m, kGen);
    PidSets ps = pids_of(state_of(m, kGen));
    std::set<Pid> retained = ps.active;
    retained.insert(ps.next_pids.begin(), ps.next_pids.end());
    if (expand(e) != e) r.fail("expanded is a fixpoint " + where);
    if (expand(s) != e) r.fail("expand of stripped " + where);
    if (strip(s, retained) != s) r.fail("stripped is a fixpoint " + where);
    if (strip(e, retained) != s) r.fail("strip of expanded " + where);
    if (!is_representation(e, m, kGen)) r.fail("expanded represents " + where);
    if (!is_representation(s, m, kGen)) r.fail("stripped represents " + where);
    if (is_clean(m, kGen) && s != e) r.fail("clean marking has one form " + where);
    // An intermediate representation between the two.
    std::set<Pid> middle = retained;
    for (const Pid& p : pids(e)) {
      if (!p.empty() && rng.chance(0.5)) middle.insert(p);
    }
    PidTree mid = strip(e, middle);
    if (!is_representation(mid, m, kGen)) r.fail("intermediate represents " + where);
    if (expand(mid) != e || strip(mid, retained) != s) r.fail("unique forms " + where);
    distinct += s != e ? 1 : 0;
  }
  r.note = std::to_string(clean) + " clean, " + std::to_string(distinct) +
           " with distinct forms";
  if (distinct == 0) r.fail("no marking separates the two forms");
  return r;
}

PropertyResult checker_signature(std::uint64_t seed, std::size_t pairs) {
  PropertyResult r{"checker and signature coincide", 0, {}, {}};
  gen::Rng rng(seed);
  std::size_t equivalent = 0;
  for (std::size_t i = 0; i < pairs; ++i, ++r.cases) {
    auto [a, b] = gen::random_tree_pair(rng);
    std::optional<PidBijection> h = tree_equivalent(a, b);
    bool same = signature(a) == signature(b);
    if (h.has_value() != same) {
      r.fail((same ? "equal signatures, checker rejects: " : "checker accepts, signatures differ: ") +
             a.to_string() + " vs " + b.to_string());
    }
    if (h) {
      ++equivalent;
      std::map<Pid, RelPath> pa = relpaths(a);
      std::map<Pid, RelPath> pb = relpaths(b);
      for (const auto& [x, y] : h->forward()) {
        if (pa.at(x) != pb.at(y)) r.fail("h ignores relative paths " + a.to_string());
      }
    }
  }
  r.note = std::to_string(equivalent) + " equivalent pairs";
  if (equivalent == 0 || equivalent == pairs) r.fail("generator produced only one outcome");
  return r;
}

PropertyResult equivalence_laws(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"tree equivalence is an equivalence", 0, {}, {}};
  gen::Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i, ++r.cases) {
    std::vector<PidTree> ts = gen::equivalent_realisations(rng, 3);
    std::string where = ts[0].to_string();
    std::optional<PidBijection> id = tree_equivalent(ts[0], ts[0]);
    if (!id) {
      r.fail("reflexive " + where);
      continue;
    }
    for (const auto& [x, y] : id->forward()) {
      if (x != y) r.fail("reflexive gives identity " + where);
    }
    auto h01 = tree_equivalent(ts[0], ts[1]);
    auto h10 = tree_equivalent(ts[1], ts[0]);
    auto h12 = tree_equivalent(ts[1], ts[2]);
    auto h02 = tree_equivalent(ts[0], ts[2]);
    if (!h01 || !h10 || !h12 || !h02) {
      r.fail("realisations not equivalent " + where + " / " + ts[1].to_string());
      continue;
    }
    if (h01->inverse() != *h10) r.fail("symmetric " + where);
    for (const auto& [x, y] : h01->forward()) {
      if (h12->image(y) != h02->image(x)) r.fail("transitive " + where);
    }
    // A mutated pair keeps symmetry of the verdict.
    auto [a, b] = gen::random_tree_pair(rng);
    if (tree_equivalent(a, b).has_value() != tree_equivalent(b, a).has_value()) {
      r.fail("symmetric verdict " + a.to_string());
    }
  }
  return r;
}

std::vector<PropertyResult> run_all(std::uint64_t seed, std::size_t scale) {
  return {
      pid_laws(seed, 20000 * scale),
      well_formedness(seed + 1, 2000 * scale),
      inclusion_order(seed + 2, 2000 * scale),
      location_bounds(seed + 3, 40 * scale),
      reconstruction(seed + 4, 40 * scale),
      canonical_forms(seed + 5, 40 * scale),
      checker_signature(seed + 6, 12000 * scale),
      equivalence_laws(seed + 7, 2000 * scale),
  };
}

}  // namespace pidsym::props
