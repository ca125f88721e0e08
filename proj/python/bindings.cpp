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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pidsym/cli.hpp"
#include "pidsym/equiv.hpp"
#include "pidsym/errors.hpp"
#include "pidsym/explore.hpp"
#include "pidsym/model_format.hpp"
#include "pidsym/oracle.hpp"
#include "pidsym/repr.hpp"
#include "pidsym/state.hpp"

namespace py = pybind11;

namespace pidsym {
namespace {

py::object to_py(const Value& v) {
  if (v.is_int()) return py::int_(v.as_int());
  if (v.is_symbol()) return py::str(v.as_symbol().name);
  return py::cast(v.as_pid());
}

// {place: [(token tuple, count), ...]}
py::dict marking_dict(const Marking& m) {
  py::dict out;
  for (const auto& [place, bag] : m.places()) {
    py::list tokens;
    for (const auto& [token, n] : bag) {
      py::tuple t(token.size());
      for (std::size_t i = 0; i < token.size(); ++i) t[i] = to_py(token[i]);
      tokens.append(py::make_tuple(t, n));
    }
    out[py::str(place)] = tokens;
  }
  return out;
}

py::object bijection(const std::optional<PidBijection>& h) {
  if (!h) return py::none();
  return py::cast(h->forward());
}

KeyForm key_form(const std::string& name) {
  if (name == "expanded") return KeyForm::kExpanded;
  if (name == "stripped") return KeyForm::kStripped;
  throw std::invalid_argument("unknown key form '" + name + "'");
}

ExploreOptions options(const std::string& mode, std::size_t max_states,
                       std::optional<std::size_t> max_depth, bool validate,
                       std::size_t audit_pid_bound, std::size_t oracle_pid_bound) {
  ExploreOptions o;
  o.mode = parse_mode(mode);
  o.max_states = max_states;
  o.max_depth = max_depth;
  o.validate = validate;
  o.audit_pid_bound = audit_pid_bound;
  o.oracle_pid_bound = oracle_pid_bound;
  return o;
}

}  // namespace
}  // namespace pidsym

PYBIND11_MODULE(_pidsym, m) {
  using namespace pidsym;
  m.doc() = "Explicit-state reachability for t-nets with pid-tree symmetry reduction.";

  py::register_exception<Error>(m, "Error");
  py::register_exception<SyntaxError>(m, "ModelSyntaxError", m.attr("Error"));
  py::register_exception<ValidationError>(m, "ModelValidationError", m.attr("Error"));
  py::register_exception<TooManyPids>(m, "TooManyPids", m.attr("Error"));

  py::class_<Pid>(m, "Pid")
      .def(py::init([](const std::vector<Pid::Part>& parts) { return Pid(parts); }))
      .def_static("parse", &Pid::parse)
      .def_property_readonly("parts", [](const Pid& p) {
        return std::vector<Pid::Part>(p.parts().begin(), p.parts().end());
      })
      .def("__len__", &Pid::length)
      .def("prefix", &Pid::prefix)
      .def("child", &Pid::child)
      .def("__str__", &Pid::to_string)
      .def("__repr__", [](const Pid& p) { return "Pid('" + p.to_string() + "')"; })
      .def("__hash__", &Pid::hash)
      .def("__eq__", [](const Pid& a, const Pid& b) { return a == b; })
      .def("__lt__", [](const Pid& a, const Pid& b) { return a < b; })
      .def("__le__", [](const Pid& a, const Pid& b) { return a <= b; });
  m.def("is_child", &is_child);
  m.def("is_ancestor", &is_ancestor);
  m.def("is_next_sibling", &is_next_sibling);
  m.def("is_elder_sibling", &is_elder_sibling);

  py::class_<Marking>(m, "Marking")
      .def("to_dict", &marking_dict)
      .def("__len__", &Marking::size)
      .def("__str__", &Marking::to_string)
      .def("__eq__", [](const Marking& a, const Marking& b) { return a == b; });

  py::class_<TNet>(m, "TNet")
      .def_property_readonly("name", &TNet::name)
      .def_property_readonly("generator", &TNet::generator)
      .def_property_readonly("places", [](const TNet& n) {
        std::vector<std::string> out;
        for (const PlaceDecl& p : n.places()) out.push_back(p.name);
        return out;
      })
      .def_property_readonly("transitions", [](const TNet& n) {
        std::vector<std::string> out;
        for (const Transition& t : n.transitions()) out.push_back(t.name);
        return out;
      })
      .def_property_readonly("initial", &TNet::initial)
      .def("__str__", &print_model);

  m.def("parse_model", [](const std::string& text, const Defines& defines) {
    return parse_model(text, defines);
  }, py::arg("text"), py::arg("defines") = Defines{});
  m.def("parse_marking", [](const std::string& text, const TNet& net) {
    return parse_marking(text, net);
  });
  m.def("print_marking", &print_marking);

  py::class_<PidTree>(m, "PidTree")
      .def_property_readonly("node_count", &PidTree::node_count)
      .def_property_readonly("pids", [](const PidTree& t) { return pids(t); })
      .def("to_dot", [](const PidTree& t, const std::string& name) { return to_dot(t, name); },
           py::arg("name") = "pidtree")
      .def("signature", [](const PidTree& t) { return py::bytes(signature(t).bytes()); })
      .def("__str__", &PidTree::to_string)
      .def("__eq__", [](const PidTree& a, const PidTree& b) { return a == b; });

  m.def("represent", [](const Marking& mk, const std::string& gen) { return represent(mk, gen); });
  m.def("stripped_form",
        [](const Marking& mk, const std::string& gen) { return stripped_form(mk, gen); });
  m.def("expand", &expand);
  m.def("is_clean", [](const Marking& mk, const std::string& gen) { return is_clean(mk, gen); });
  m.def("tree_equivalent",
        [](const PidTree& a, const PidTree& b) { return bijection(tree_equivalent(a, b)); });
  m.def("state_key", [](const Marking& mk, const std::string& gen, const std::string& form) {
    return py::bytes(state_key(mk, gen, key_form(form)).bytes());
  }, py::arg("marking"), py::arg("generator"), py::arg("form") = "stripped");
  m.def("state_equivalent",
        [](const Marking& a, const Marking& b, const std::string& gen, std::size_t max_pids) {
          return bijection(state_equivalent(a, b, gen, max_pids));
        },
        py::arg("m1"), py::arg("m2"), py::arg("generator"),
        py::arg("max_pids") = kDefaultOraclePidBound);

  py::class_<StateSpace>(m, "StateSpace")
      .def_readonly("model", &StateSpace::model)
      .def_property_readonly("mode", [](const StateSpace& s) { return mode_name(s.mode); })
      .def_property_readonly("num_states", [](const StateSpace& s) { return s.states.size(); })
      .def_property_readonly("num_edges", [](const StateSpace& s) { return s.edges.size(); })
      .def_readonly("states", &StateSpace::states)
      .def_readonly("truncated", &StateSpace::truncated)
      .def_readonly("max_depth_reached", &StateSpace::max_depth_reached)
      .def_readonly("wall_ms", &StateSpace::wall_ms)
      .def_readonly("merges_audited", &StateSpace::merges_audited)
      .def_readonly("audit_skipped", &StateSpace::audit_skipped)
      .def_readonly("audit_failures", &StateSpace::audit_failures)
      .def_readonly("failures", &StateSpace::failures)
      .def("to_json", [](const StateSpace& s) { return to_json(s); })
      .def("to_dot", [](const StateSpace& s, const TNet& net) { return to_dot(net, s); });

  m.def("explore",
        [](const TNet& net, const std::string& mode, std::size_t max_states,
           std::optional<std::size_t> max_depth, bool validate, std::size_t audit_pid_bound,
           std::size_t oracle_pid_bound) {
          py::gil_scoped_release release;
          return explore(net, options(mode, max_states, max_depth, validate, audit_pid_bound,
                                      oracle_pid_bound));
        },
        py::arg("net"), py::arg("mode") = "stripped", py::arg("max_states") = 100000,
        py::arg("max_depth") = py::none(), py::arg("validate") = false,
        py::arg("audit_pid_bound") = 8, py::arg("oracle_pid_bound") = kDefaultOraclePidBound);
  m.def("compare_reductions_json",
        [](const TNet& net, std::size_t max_states, bool validate, std::size_t oracle_pid_bound) {
          py::gil_scoped_release release;
          return to_json(compare_reductions(
              net, options("stripped", max_states, std::nullopt, validate, 8, oracle_pid_bound)));
        },
        py::arg("net"), py::arg("max_states") = 100000, py::arg("validate") = false,
        py::arg("oracle_pid_bound") = kDefaultOraclePidBound);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
