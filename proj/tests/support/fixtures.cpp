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

#include "fixtures.hpp"

#include "pidsym/marking.hpp"

namespace pidsym::fixtures {

Pid pid(std::string_view text) { return Pid::parse(text); }

Token tok(std::initializer_list<Value> values) { return Token(values); }

Marking marking(
    std::initializer_list<std::pair<std::string, std::vector<Token>>> places) {
  Marking m;
  for (const auto& [place, tokens] : places) {
    for (const Token& t : tokens) m.add(place, t);
  }
  return m;
}

PidTree node(Marking m, Children children) {
  std::vector<PidTree::Edge> edges;
  for (auto& [fragment, tree] : children) {
    edges.push_back({Pid::parse(fragment), std::move(tree)});
  }
  return PidTree(std::move(m), std::move(edges));
}

PidTree branch(Children children) { return node(Marking(), std::move(children)); }

PidTree leaf() { return PidTree(); }

SiblingOffsetQuartet sibling_offset_quartet() {
  // (counter of 1, worker pid a, its counter, next sibling b, c.1, c.2)
  struct Shape {
    int root_counter;
    const char* worker;
    int worker_counter;
    const char* first;
    const char* second;
  };
  const Shape shapes[4] = {
      {2, "1.1", 0, "1.2.1", "1.2.2"},
      {6, "1.4", 1, "1.3.1", "1.3.2"},
      {4, "1.4", 1, "1.3.1", "1.3.2"},
      {5, "1.4", 1, "1.3.1", "1.3.3"},
  };
  SiblingOffsetQuartet q;
  for (int i = 0; i < 4; ++i) {
    const Shape& s = shapes[i];
    Pid worker = pid(s.worker);
    q.markings[i] = marking({
        {"s1", {tok({pid("1")})}},
        {"s2", {tok({worker, pid(s.first), pid(s.second)})}},
        {std::string(kGen),
         {tok({pid("1"), s.root_counter}), tok({worker, s.worker_counter})}},
    });
    std::string worker_frag = std::to_string(worker.last());
    std::string next_frag = std::to_string(s.root_counter + 1);
    std::string child_frag = std::to_string(s.worker_counter + 1);
    Pid first = pid(s.first);
    Pid second = pid(s.second);
    q.trees[i] = branch({{"1", node(marking({{"s1", {tok({pid("1")})}}}),
                                  {
                                      {worker_frag,
                                       node(marking({{"s2", {tok({worker, first, second})}}}),
                                            {{child_frag, leaf()}})},
                                      {next_frag, leaf()},
                                      {first.tail(1).to_string(), leaf()},
                                      {second.tail(1).to_string(), leaf()},
                                  })}});
  }
  return q;
}

StripPair strip_pair() {
  StripPair p;
  auto own = [](const char* place, const char* who) {
    return std::pair<std::string, std::vector<Token>>{place, {tok({pid(who)})}};
  };
  p.first = marking({
      {"s1", {tok({7})}},
      own("a", "1"),
      own("b", "1.2"),
      own("c", "1.1.1"),
      own("d", "1.2.1"),
      {std::string(kGen),
       {tok({pid("1"), 2}), tok({pid("1.2"), 1}), tok({pid("1.1.1"), 0}),
        tok({pid("1.2.1"), 0})}},
  });
  p.second = marking({
      {"s1", {tok({7})}},
      own("a", "1"),
      own("b", "1.1"),
      own("c", "1.2.1"),
      own("d", "1.1.1"),
      {std::string(kGen),
       {tok({pid("1"), 2}), tok({pid("1.1"), 1}), tok({pid("1.1.1"), 0}),
        tok({pid("1.2.1"), 0})}},
  });
  auto at = [](const char* place, const char* who) {
    return marking({{place, {tok({pid(who)})}}});
  };
  Marking root = marking({{"s1", {tok({7})}}});

  p.first_expanded = node(
      root,
      {{"1", node(at("a", "1"),
                  {{"1", branch({{"1", node(at("c", "1.1.1"), {{"1", leaf()}})}})},
                   {"2", node(at("b", "1.2"),
                              {{"1", node(at("d", "1.2.1"), {{"1", leaf()}})},
                               {"2", leaf()}})},
                   {"3", leaf()}})}});
  p.second_expanded = node(
      root,
      {{"1", node(at("a", "1"),
                  {{"1", node(at("b", "1.1"),
                              {{"1", node(at("d", "1.1.1"), {{"1", leaf()}})},
                               {"2", leaf()}})},
                   {"2", branch({{"1", node(at("c", "1.2.1"), {{"1", leaf()}})}})},
                   {"3", leaf()}})}});
  p.first_stripped = node(
      root,
      {{"1", node(at("a", "1"),
                  {{"2", node(at("b", "1.2"),
                              {{"1", node(at("d", "1.2.1"), {{"1", leaf()}})},
                               {"2", leaf()}})},
                   {"3", leaf()},
                   {"1.1", node(at("c", "1.1.1"), {{"1", leaf()}})}})}});
  p.second_stripped = node(
      root,
      {{"1", node(at("a", "1"),
                  {{"1", node(at("b", "1.1"),
                              {{"1", node(at("d", "1.1.1"), {{"1", leaf()}})},
                               {"2", leaf()}})},
                   {"3", leaf()},
                   {"2.1", node(at("c", "1.2.1"), {{"1", leaf()}})}})}});
  return p;
}

IncompletePair incomplete_pair() {
  IncompletePair p;
  Token gen_root = tok({pid("1"), 2});
  Token gen_a = tok({pid("1.1.1"), 0});
  Token gen_b = tok({pid("1.2.1"), 0});
  Token e1 = tok({pid("1.1.1"), pid("1.2.1")});
  Token e2 = tok({pid("1.2.1"), pid("1")});
  Token f1 = tok({pid("1.1.1"), pid("1")});
  Token f2 = tok({pid("1.2.1"), pid("1.1.1")});
  p.first = marking({{"q", {e1, e2}}, {std::string(kGen), {gen_root, gen_a, gen_b}}});
  p.second = marking({{"q", {f1, f2}}, {std::string(kGen), {gen_root, gen_a, gen_b}}});
  auto tree = [](const Token& at11, const Token& at21) {
    return branch({{"1", branch({{"3", leaf()},
                             {"1.1", node(marking({{"q", {at11}}}), {{"1", leaf()}})},
                             {"2.1", node(marking({{"q", {at21}}}), {{"1", leaf()}})}})}});
  };
  p.first_stripped = tree(e1, e2);
  p.second_stripped = tree(f1, f2);
  return p;
}

TwoRepresentations two_representations() {
  TwoRepresentations r;
  r.marking = marking({
      {"s1", {tok({12})}},
      {"s2", {tok({pid("1")}), tok({pid("1.1.2")})}},
      {std::string(kGen), {tok({pid("1"), 1}), tok({pid("1.1.2"), 0})}},
  });
  Marking root = marking({{"s1", {tok({12})}}});
  Marking at1 = marking({{"s2", {tok({pid("1")})}}});
  Marking at112 = marking({{"s2", {tok({pid("1.1.2")})}}});
  r.expanded = node(
      root, {{"1", node(at1, {{"1", branch({{"2", node(at112, {{"1", leaf()}})}})},
                              {"2", leaf()}})}});
  r.merged = node(
      root, {{"1", node(at1, {{"2", leaf()},
                              {"1.2", node(at112, {{"1", leaf()}})}})}});
  return r;
}

InclusionTrees inclusion_trees() {
  auto x = [](std::initializer_list<int> values) {
    Marking m;
    for (int v : values) m.add("x", tok({v}));
    return m;
  };
  InclusionTrees t;
  t.leaf_marking = x({4});
  t.branching = node(
      x({1, 11}),
      {{"1", branch({{"1", node(x({2, 22}), {{"1", node(x({4, 44}))}, {"2", leaf()}})},
                   {"2.1", branch({{"3", node(x({3}))}})}})}});
  t.included = node(
      x({1}), {{"1", branch({{"1", branch({{"1", node(x({4}))}, {"2", leaf()}})}})}});
  t.path_expanded =
      branch({{"1", branch({{"1", branch({{"1", node(x({4}))}})}})}});
  t.path_single_edge = branch({{"1.1.1", node(x({4}))}});
  return t;
}

std::string one_spawn_model() {
  return "net spawner\n"
         "place gen GEN\n"
         "trans t_spawn\n"
         "  in gen { (p1, c1) }\n"
         "  out gen { (p1, c1+1); (p1.(c1+1), 0) }\n"
         "end\n";
}

std::string spawn_tick_model() {
  return "net spawn_tick\n"
         "place gen GEN\n"
         "place log D\n"
         "init log { (0) }\n"
         "trans t_spawn\n"
         "  in gen { (p1, c1) }\n"
         "  out gen { (p1, c1+1); (p1.(c1+1), 0) }\n"
         "end\n"
         "trans t_tick\n"
         "  guard k < 3\n"
         "  in log { (k) }\n"
         "  out log { (k+1) }\n"
         "end\n";
}

std::string orphan_model() {
  return "net orphans\n"
         "place gen GEN\n"
         "place budget D\n"
         "place mid P\n"
         "place leaf P\n"
         "init budget { (0) }\n"
         "trans spawn_mid\n"
         "  guard k < 2\n"
         "  in budget { (k) }\n"
         "  in gen { (p, c) }\n"
         "  out budget { (k+1) }\n"
         "  out gen { (p, c+1); (p.(c+1), 0) }\n"
         "  out mid { (p.(c+1)) }\n"
         "end\n"
         "trans hand_off\n"
         "  in mid { (m) }\n"
         "  in gen { (m, d) }\n"
         "  out gen { (m.(d+1), 0) }\n"
         "  out leaf { (m.(d+1)) }\n"
         "end\n";
}

std::string single_path_model() {
  return "net single_path\n"
         "place gen GEN\n"
         "place step D\n"
         "init step { (0) }\n"
         "trans advance\n"
         "  guard k < 3\n"
         "  in step { (k) }\n"
         "  out step { (k+1) }\n"
         "end\n";
}

}  // namespace pidsym::fixtures
