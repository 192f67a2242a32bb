// Copyright 2026 The rbc Authors
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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rbc/diagram.hpp"
#include "rbc/error.hpp"
#include "rbc/rewrite.hpp"

namespace rbc {

// Circuit files are line based:
//
//   # comment
//   wires 4
//   t3 0
//   swap 2
//
// The header comes first; each further line is one gate, top to bottom,
// written as its mnemonic and 0-based offset. Blank lines and everything
// after '#' are ignored.
//
// Rule catalogs pair two circuits per rule:
//
//   rule p_swap2
//   wires 2
//   swap 0
//   swap 0
//   =>
//   wires 2
//   end
//
// "⇒" is accepted in place of "=>".

/// Throws ParseError (code Parse or OutOfRange) with the 1-based line and column.
Diagram parse_circuit(std::string_view text);
std::string print_circuit(const Diagram& d);

/// Parses a catalog without checking rule invariants.
std::vector<Rule> parse_rules(std::string_view text);
std::string print_rules(const std::vector<Rule>& rules);

/// "line L, column C: message 'token'"
std::string describe(const ParseError& e);

}  // namespace rbc
