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

#ifndef PIDSYM_MODEL_FORMAT_HPP_
#define PIDSYM_MODEL_FORMAT_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pidsym/errors.hpp"
#include "pidsym/marking.hpp"
#include "pidsym/net.hpp"

namespace pidsym {

// The parsed net breaks some t-net requirement.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

using Defines = std::map<std::string, std::int64_t>;

// Model text:
//
//   net <name>
//   define <NAME> <int>                 textual integer constant
//   place <id> GEN                      the generator place
//   place <id> P,D,...                  pid / data components
//   init <place> { (v, ...); ... }      pids written 1.2.3, symbols "x"
//   trans <id>
//     guard <expr>                      one line, optional
//     in  <place> { (pattern); ... }
//     out <place> { (expr); ... }
//   end
//
// `#` starts a comment at the beginning of a line or when followed by a
// blank; `#1` and `##` are sibling operators. Integer less-than needs a blank
// after `<` since `<1` is the child operator. Without an init line the
// generator place holds (1, 0).
//
// `overrides` replace the values of same-named define lines (and may name
// constants the text does not define). Throws SyntaxError, or
// ValidationError when the net parses but is not a t-net.
TNet parse_model(std::string_view text, const Defines& overrides = {});
// Same without the t-net validation.
TNet parse_model_unchecked(std::string_view text,
                           const Defines& overrides = {});

// Text that parse_model_unchecked turns back into an equal net.
std::string print_model(const TNet& net);

// Lines of `<place> { (v, ...); ... }`, typed by the places of `net`.
Marking parse_marking(std::string_view text, const TNet& net);
std::string print_marking(const Marking& m);

}  // namespace pidsym

#endif  // PIDSYM_MODEL_FORMAT_HPP_
