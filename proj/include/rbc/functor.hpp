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

#include <optional>
#include <string>
#include <vector>

#include "rbc/diagram.hpp"
#include "rbc/moves.hpp"

namespace rbc {

struct Rule;

/// Image of a generator: SWAP (v,w) -> (w l, v r); NOT v -> v t;
/// T2 and T3 append t on every wire they touch.
MoveMap phi_gate(GateKind kind);

/// Image of a diagram: the series composite of every gate padded with
/// identities to the full width.
MoveMap phi(const Diagram& d);

/// <phi(lhs), phi(rhs)>. Throws Error(NotDecreasing) when phi(rhs) is not
/// below phi(lhs), and Error(WidthMismatch) on unequal widths.
MoveStep phi_rule(const Rule& r);

struct StrictnessEntry {
  std::string rule;
  MoveMap lhs;
  MoveMap rhs;
  /// map_compare(phi(lhs), phi(rhs)); Greater means the rule is strict.
  MapOrder verdict = MapOrder::Incomparable;
  /// First wire whose suffix differs, when the routings agree.
  std::optional<std::size_t> witness_wire;

  bool strict() const noexcept { return verdict == MapOrder::Greater; }
};

struct StrictnessReport {
  std::vector<StrictnessEntry> entries;

  bool all_strict() const noexcept;
  std::size_t strict_count() const noexcept;
};

StrictnessReport verify_strict(const std::vector<Rule>& rules);

/// One line per rule:
///   RULE <name>: STRICT (witness: <lhs> > <rhs> at wire i) [lhs-vector] > [rhs-vector]
///   RULE <name>: NOT STRICT (<verdict>) [lhs-vector] vs [rhs-vector]
std::string format_strictness_report(const StrictnessReport& report);

/// "(ll, lr, rr)" with the empty word shown as "".
std::string format_suffix_vector(const MoveMap& f);

}  // namespace rbc
