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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rbc/diagram.hpp"
#include "rbc/moves.hpp"
#include "rbc/semantics.hpp"

namespace rbc {

/// An oriented reduction lhs => rhs between circuits of equal width.
struct Rule {
  std::string name;
  Diagram lhs;
  Diagram rhs;

  std::size_t width() const noexcept { return lhs.width(); }
};

/// Description of the first broken rule invariant (equal widths, non-empty
/// lhs, equal truth tables, phi(lhs) strictly above phi(rhs)), if any.
std::optional<std::string> rule_violation(const Rule& r,
                                          std::size_t max_width = kDefaultTruthTableWidth);

/// The twelve reductions in priority order: annihilation, permutation,
/// sliding, swapped Toffoli.
const std::vector<Rule>& builtin_rules();

/// An occurrence of a rule's lhs in a host diagram, up to exchange.
struct Match {
  std::size_t rule = 0;  // index into the rule list searched
  std::string rule_name;
  std::size_t offset = 0;            // wire the rule window starts at
  std::vector<std::size_t> gates;    // host gate indices, ascending

  friend bool operator==(const Match&, const Match&) = default;
};

/// Every occurrence, ordered by (first matched gate, offset, rule index).
/// Gate indices refer to `d` as given; callers normally pass a canonical
/// diagram.
std::vector<Match> find_matches(const Diagram& d, std::span<const Rule> rules);
/// Occurrences of rules[rule] only, same order.
std::vector<Match> find_matches(const Diagram& d, std::span<const Rule> rules, std::size_t rule);

bool is_valid_match(const Diagram& d, const Match& m, std::span<const Rule> rules);

/// Replaces the occurrence by the rule's rhs and returns the canonical result.
/// Throws Error(StaleMatch) when `m` is not an occurrence in `d`.
Diagram apply_match(const Diagram& d, const Match& m, std::span<const Rule> rules);

struct ReductionStep {
  Match match;
  Diagram before;
  Diagram after;
};

struct ReductionTrace {
  Diagram initial;
  std::vector<ReductionStep> steps;

  const Diagram& final_diagram() const noexcept {
    return steps.empty() ? initial : steps.back().after;
  }
};

struct NormalizeOptions {
  /// Overrides default_step_limit when set.
  std::optional<std::uint64_t> step_limit;
};

struct NormalizeResult {
  Diagram normal_form;
  ReductionTrace trace;
};

/// 10 x gate count x (epsilon rank of phi(d) + 1), saturated. Every step
/// lowers the epsilon rank, so a correct engine never reaches it.
std::uint64_t default_step_limit(const Diagram& d);

/// Rewrites with the highest-priority rule that has an occurrence, topmost
/// then leftmost, until no rule applies. Throws Error(StepLimitExceeded).
NormalizeResult normalize(const Diagram& d, std::span<const Rule> rules,
                          const NormalizeOptions& options = {});

/// Breadth-first search of the reduction graph from canonicalize(d).
/// Returns the canonical normal forms in ascending order. Throws
/// Error(StateLimitExceeded) once more than max_states states are seen.
std::vector<Diagram> all_normal_forms(const Diagram& d, std::span<const Rule> rules,
                                      std::size_t max_states);

struct StepCheck {
  bool chained = true;              // before matches the previous after
  bool semantics_checked = false;   // false when wider than the table cap
  bool semantics_preserved = true;
  MapOrder measure = MapOrder::Less;  // map_compare(phi(after), phi(before))
  Rank rank_before;
  Rank rank_after;

  bool ok() const {
    return chained && semantics_preserved && measure == MapOrder::Less && rank_after < rank_before;
  }
};

struct TraceReport {
  std::vector<StepCheck> steps;
  std::vector<Rank> ranks;  // epsilon ranks of initial and every after

  bool ok() const;
};

TraceReport verify_trace(const ReductionTrace& t,
                         std::size_t max_width = kDefaultTruthTableWidth);

/// One line per step:
///   step <k>: <rule> @ wires[<offset>] gates[<i,j,...>] rank <before> -> <after>
std::string format_trace(const ReductionTrace& t);
std::string format_trace_report(const TraceReport& r);

}  // namespace rbc
