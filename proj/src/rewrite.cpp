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

#include "rbc/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <sstream>

#include "rbc/error.hpp"
#include "rbc/functor.hpp"

namespace rbc {
namespace {

Rule make_rule(std::string name, std::size_t width, std::vector<Gate> lhs, std::vector<Gate> rhs) {
  return Rule{std::move(name), Diagram(width, std::move(lhs)), Diagram(width, std::move(rhs))};
}

constexpr Gate sw(std::size_t k) { return {GateKind::Swap, k}; }
constexpr Gate neg(std::size_t k) { return {GateKind::Not, k}; }
constexpr Gate t2(std::size_t k) { return {GateKind::T2, k}; }
constexpr Gate t3(std::size_t k) { return {GateKind::T3, k}; }

std::vector<Rule> make_builtin_rules() {
  std::vector<Rule> rules = {
      make_rule("a_not", 1, {neg(0), neg(0)}, {}),
      make_rule("a_t2", 2, {t2(0), t2(0)}, {}),
      make_rule("a_t3", 3, {t3(0), t3(0)}, {}),
      make_rule("p_swap2", 2, {sw(0), sw(0)}, {}),
      make_rule("p_yang_baxter", 3, {sw(0), sw(1), sw(0)}, {sw(1), sw(0), sw(1)}),
      make_rule("s_not_L", 2, {sw(0), neg(0)}, {neg(1), sw(0)}),
      make_rule("s_not_R", 2, {sw(0), neg(1)}, {neg(0), sw(0)}),
      make_rule("s_t2_L", 3, {sw(0), sw(1), t2(0)}, {t2(1), sw(0), sw(1)}),
      make_rule("s_t2_R", 3, {sw(1), sw(0), t2(1)}, {t2(0), sw(1), sw(0)}),
      make_rule("s_t3_L", 4, {sw(0), sw(1), sw(2), t3(0)}, {t3(1), sw(0), sw(1), sw(2)}),
      make_rule("s_t3_R", 4, {sw(2), sw(1), sw(0), t3(1)}, {t3(0), sw(2), sw(1), sw(0)}),
      make_rule("t_swapped_t3", 3, {sw(0), t3(0)}, {t3(0), sw(0)}),
  };
  for (const Rule& r : rules) {
    if (auto why = rule_violation(r)) throw Error(ErrorCode::InvalidRule, *why);
  }
  return rules;
}

// No unmatched gate lies on a dependency path between two matched ones.
bool is_convex(const DependencyDag& dag, const std::vector<std::size_t>& sorted) {
  for (std::size_t u = sorted.front() + 1; u < sorted.back(); ++u) {
    if (std::binary_search(sorted.begin(), sorted.end(), u)) continue;
    bool below = false;
    bool above = false;
    for (std::size_t h : sorted) {
      below = below || dag.reaches(h, u);
      above = above || dag.reaches(u, h);
    }
    if (below && above) return false;
  }
  return true;
}

// Occurrences of one rule at one window offset. LHS gates that overlap must
// keep their relative order in the host; disjoint ones may appear in either.
void match_at(const Diagram& d, const DependencyDag& dag, const Rule& rule, std::size_t rule_index,
              std::size_t offset, std::vector<Match>& out) {
  const auto& lhs = rule.lhs.gates();
  const std::size_t m = lhs.size();
  std::vector<std::vector<std::size_t>> candidates(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Gate want = lhs[i].shifted(static_cast<std::ptrdiff_t>(offset));
    for (std::size_t h = 0; h < d.size(); ++h) {
      if (d[h] == want) candidates[i].push_back(h);
    }
    if (candidates[i].empty()) return;
  }

  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> assigned(m);
  std::vector<bool> used(d.size(), false);

  auto search = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      std::vector<std::size_t> sorted = assigned;
      std::sort(sorted.begin(), sorted.end());
      if (!is_convex(dag, sorted) || !seen.insert(sorted).second) return;
      out.push_back(Match{rule_index, rule.name, offset, std::move(sorted)});
      return;
    }
    for (std::size_t h : candidates[i]) {
      if (used[h]) continue;
      bool ordered = true;
      for (std::size_t j = 0; j < i && ordered; ++j) {
        if (!commute(lhs[j], lhs[i])) ordered = assigned[j] < h;
      }
      if (!ordered) continue;
      used[h] = true;
      assigned[i] = h;
      self(self, i + 1);
      used[h] = false;
    }
  };
  if (m > 0) search(search, 0);
}

void sort_matches(std::vector<Match>& ms) {
  std::sort(ms.begin(), ms.end(), [](const Match& a, const Match& b) {
    if (a.gates.front() != b.gates.front()) return a.gates.front() < b.gates.front();
    if (a.offset != b.offset) return a.offset < b.offset;
    if (a.rule != b.rule) return a.rule < b.rule;
    return a.gates < b.gates;
  });
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

}  // namespace

std::optional<std::string> rule_violation(const Rule& r, std::size_t max_width) {
  if (r.lhs.width() != r.rhs.width()) {
    return "rule " + r.name + ": sides have widths " + std::to_string(r.lhs.width()) + " and " +
           std::to_string(r.rhs.width());
  }
  if (r.lhs.empty()) return "rule " + r.name + ": empty left-hand side";
  if (r.width() <= max_width && truth_table(r.lhs, max_width) != truth_table(r.rhs, max_width)) {
    return "rule " + r.name + ": sides compute different functions";
  }
  const MapOrder o = map_compare(phi(r.lhs), phi(r.rhs));
  if (o != MapOrder::Greater) {
    return "rule " + r.name + ": measure does not decrease (" + to_string(o) + ")";
  }
  return std::nullopt;
}

const std::vector<Rule>& builtin_rules() {
  static const std::vector<Rule> rules = make_builtin_rules();
  return rules;
}

std::vector<Match> find_matches(const Diagram& d, std::span<const Rule> rules, std::size_t rule) {
  std::vector<Match> out;
  if (rule >= rules.size() || d.empty()) return out;
  const Rule& r = rules[rule];
  if (r.width() > d.width() || r.lhs.empty()) return out;
  const DependencyDag dag(d);
  for (std::size_t k = 0; k + r.width() <= d.width(); ++k) match_at(d, dag, r, rule, k, out);
  sort_matches(out);
  return out;
}

std::vector<Match> find_matches(const Diagram& d, std::span<const Rule> rules) {
  std::vector<Match> out;
  if (d.empty()) return out;
  const DependencyDag dag(d);
  for (std::size_t ri = 0; ri < rules.size(); ++ri) {
    const Rule& r = rules[ri];
    if (r.width() > d.width() || r.lhs.empty()) continue;
    for (std::size_t k = 0; k + r.width() <= d.width(); ++k) match_at(d, dag, r, ri, k, out);
  }
  sort_matches(out);
  return out;
}

bool is_valid_match(const Diagram& d, const Match& m, std::span<const Rule> rules) {
  if (m.rule >= rules.size() || m.gates.empty()) return false;
  const Rule& r = rules[m.rule];
  if (r.name != m.rule_name || m.gates.size() != r.lhs.size()) return false;
  if (m.offset + r.width() > d.width()) return false;
  if (!std::is_sorted(m.gates.begin(), m.gates.end()) ||
      std::adjacent_find(m.gates.begin(), m.gates.end()) != m.gates.end() ||
      m.gates.back() >= d.size()) {
    return false;
  }
  std::vector<Gate> restricted;
  for (std::size_t h : m.gates) {
    const Gate& g = d[h];
    if (g.offset < m.offset) return false;
    restricted.push_back(g.shifted(-static_cast<std::ptrdiff_t>(m.offset)));
  }
  if (validate(r.width(), restricted)) return false;
  if (!equivalent(Diagram(r.width(), std::move(restricted)), r.lhs)) return false;

  return is_convex(DependencyDag(d), m.gates);
}

Diagram apply_match(const Diagram& d, const Match& m, std::span<const Rule> rules) {
  if (!is_valid_match(d, m, rules)) {
    throw Error(ErrorCode::StaleMatch, "match of " + m.rule_name + " at wire " +
                                           std::to_string(m.offset) +
                                           " does not occur in the diagram");
  }
  const Rule& r = rules[m.rule];
  const DependencyDag dag(d);
  std::vector<bool> in(d.size(), false);
  for (std::size_t h : m.gates) in[h] = true;

  // Unmatched gates that must precede the occurrence go first, then the
  // rhs, then everything else. Convexity makes this a valid reordering.
  std::vector<Gate> before;
  std::vector<Gate> after;
  for (std::size_t u = 0; u < d.size(); ++u) {
    if (in[u]) continue;
    bool precedes = false;
    for (std::size_t h : m.gates) {
      if (dag.reaches(u, h)) {
        precedes = true;
        break;
      }
    }
    (precedes ? before : after).push_back(d[u]);
  }
  std::vector<Gate> gates = std::move(before);
  for (const Gate& g : r.rhs.gates()) gates.push_back(g.shifted(static_cast<std::ptrdiff_t>(m.offset)));
  gates.insert(gates.end(), after.begin(), after.end());
  return canonicalize(Diagram(d.width(), std::move(gates)));
}

std::uint64_t default_step_limit(const Diagram& d) {
  const Rank rank = epsilon_rank(phi(d)) + 1;
  const std::uint64_t bound = rank > Rank(std::numeric_limits<std::uint64_t>::max())
                                  ? std::numeric_limits<std::uint64_t>::max()
                                  : static_cast<std::uint64_t>(rank);
  return saturating_mul(saturating_mul(10, std::max<std::uint64_t>(1, d.size())), bound);
}

NormalizeResult normalize(const Diagram& d, std::span<const Rule> rules,
                          const NormalizeOptions& options) {
  const std::uint64_t limit = options.step_limit.value_or(default_step_limit(d));
  ReductionTrace trace;
  trace.initial = d;
  Diagram current = canonicalize(d);
  for (;;) {
    std::optional<Match> chosen;
    for (std::size_t ri = 0; ri < rules.size() && !chosen; ++ri) {
      auto ms = find_matches(current, rules, ri);
      if (!ms.empty()) chosen = std::move(ms.front());
    }
    if (!chosen) break;
    if (trace.steps.size() >= limit) {
      throw Error(ErrorCode::StepLimitExceeded,
                  "normalization exceeded " + std::to_string(limit) + " steps");
    }
    Diagram next = apply_match(current, *chosen, rules);
    trace.steps.push_back(ReductionStep{std::move(*chosen), current, next});
    current = std::move(next);
  }
  return NormalizeResult{current, std::move(trace)};
}

std::vector<Diagram> all_normal_forms(const Diagram& d, std::span<const Rule> rules,
                                      std::size_t max_states) {
  std::set<Diagram> visited;
  std::set<Diagram> normal_forms;
  std::deque<Diagram> frontier;
  Diagram start = canonicalize(d);
  visited.insert(start);
  frontier.push_back(std::move(start));
  if (visited.size() > max_states) {
    throw Error(ErrorCode::StateLimitExceeded, "state limit " + std::to_string(max_states));
  }
  while (!frontier.empty()) {
    Diagram state = std::move(frontier.front());
    frontier.pop_front();
    const auto ms = find_matches(state, rules);
    if (ms.empty()) {
      normal_forms.insert(state);
      continue;
    }
    for (const Match& m : ms) {
      Diagram next = apply_match(state, m, rules);
      if (visited.insert(next).second) {
        if (visited.size() > max_states) {
          throw Error(ErrorCode::StateLimitExceeded,
                      "reduction graph has more than " + std::to_string(max_states) + " states");
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  return {normal_forms.begin(), normal_forms.end()};
}

bool TraceReport::ok() const {
  return std::all_of(steps.begin(), steps.end(), [](const StepCheck& s) { return s.ok(); });
}

TraceReport verify_trace(const ReductionTrace& t, std::size_t max_width) {
  TraceReport report;
  report.ranks.push_back(epsilon_rank(phi(t.initial)));
  const Diagram* previous = &t.initial;
  for (const ReductionStep& step : t.steps) {
    StepCheck c;
    c.chained = equivalent(*previous, step.before);
    if (step.before.width() == step.after.width()) {
      if (step.before.width() <= max_width) {
        c.semantics_checked = true;
        c.semantics_preserved =
            truth_table(step.before, max_width) == truth_table(step.after, max_width);
      }
      const MoveMap before = phi(step.before);
      const MoveMap after = phi(step.after);
      c.measure = map_compare(after, before);
      c.rank_before = epsilon_rank(before);
      c.rank_after = epsilon_rank(after);
    } else {
      c.semantics_preserved = false;
      c.measure = MapOrder::Incomparable;
    }
    report.ranks.push_back(c.rank_after);
    report.steps.push_back(std::move(c));
    previous = &step.after;
  }
  return report;
}

std::string format_trace(const ReductionTrace& t) {
  std::ostringstream os;
  std::size_t k = 1;
  for (const ReductionStep& s : t.steps) {
    os << "step " << k++ << ": " << s.match.rule_name << " @ wires[" << s.match.offset
       << "] gates[";
    for (std::size_t i = 0; i < s.match.gates.size(); ++i) {
      if (i) os << ',';
      os << s.match.gates[i];
    }
    os << "] rank " << epsilon_rank(phi(s.before)) << " -> " << epsilon_rank(phi(s.after)) << '\n';
  }
  return os.str();
}

std::string format_trace_report(const TraceReport& r) {
  std::ostringstream os;
  std::size_t k = 1;
  for (const StepCheck& c : r.steps) {
    os << "check " << k++ << ": semantics "
       << (!c.semantics_checked ? "skipped" : c.semantics_preserved ? "preserved" : "CHANGED")
       << ", measure " << (c.measure == MapOrder::Less ? "decreases" : "DOES NOT DECREASE")
       << " (" << to_string(c.measure) << "), rank " << c.rank_before << " -> " << c.rank_after;
    if (!c.chained) os << ", NOT CHAINED";
    os << '\n';
  }
  os << "ranks:";
  for (const Rank& rank : r.ranks) os << ' ' << rank;
  os << '\n' << "verified: " << (r.ok() ? "yes" : "no") << '\n';
  return os.str();
}

}  // namespace rbc
