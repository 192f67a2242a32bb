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

#include <map>
#include <set>
#include <sstream>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "rbc/error.hpp"
#include "rbc/functor.hpp"

using namespace rbc;

namespace {

Gate sw(std::size_t k) { return {GateKind::Swap, k}; }
Gate neg(std::size_t k) { return {GateKind::Not, k}; }
Gate t2(std::size_t k) { return {GateKind::T2, k}; }
Gate t3(std::size_t k) { return {GateKind::T3, k}; }

const std::vector<Rule>& rules() { return builtin_rules(); }

std::size_t rule_index(const std::string& name) {
  for (std::size_t i = 0; i < rules().size(); ++i) {
    if (rules()[i].name == name) return i;
  }
  throw std::runtime_error("no rule " + name);
}

Match match(const std::string& name, std::size_t offset, std::vector<std::size_t> gates) {
  return Match{rule_index(name), name, offset, std::move(gates)};
}

const Diagram kRotation(4, {t3(0), sw(2), sw(1), sw(0), t3(1)});
const Diagram kBraid(3, {sw(0), sw(1), sw(0), t2(1)});

}  // namespace

TEST(rewrite, catalog) {
  ASSERT_EQ(rules().size(), 12u);
  const std::vector<std::string> names = {"a_not",  "a_t2",   "a_t3",   "p_swap2",
                                          "p_yang_baxter", "s_not_L", "s_not_R", "s_t2_L",
                                          "s_t2_R", "s_t3_L", "s_t3_R", "t_swapped_t3"};
  for (std::size_t i = 0; i < names.size(); ++i) EXPECT_EQ(rules()[i].name, names[i]);
  for (const Rule& r : rules()) EXPECT_FALSE(rule_violation(r).has_value()) << r.name;
  EXPECT_EQ(phi(rules()[rule_index("s_t3_L")].lhs).suffixes(),
            (std::vector<MoveWord>{MoveWord("lt"), MoveWord("lt"), MoveWord("lt"), MoveWord("rrr")}));
}

TEST(rewrite, rule_violations) {
  const Diagram s(2, {sw(0)});
  EXPECT_TRUE(rule_violation(Rule{"same", s, s}).has_value());
  EXPECT_TRUE(rule_violation(Rule{"widths", s, Diagram::identity(3)}).has_value());
  EXPECT_TRUE(rule_violation(Rule{"semantics", Diagram(1, {neg(0)}), Diagram::identity(1)}).has_value());
  EXPECT_TRUE(rule_violation(Rule{"empty", Diagram::identity(1), Diagram::identity(1)}).has_value());
}

TEST(rewrite, find_matches_examples) {
  const auto m1 = find_matches(Diagram(2, {sw(0), sw(0)}), rules());
  ASSERT_EQ(m1.size(), 1u);
  EXPECT_EQ(m1[0], match("p_swap2", 0, {0, 1}));

  const auto m2 = find_matches(kBraid, rules());
  ASSERT_EQ(m2.size(), 2u);
  EXPECT_EQ(m2[0], match("p_yang_baxter", 0, {0, 1, 2}));
  EXPECT_EQ(m2[1], match("s_t2_R", 0, {1, 2, 3}));

  // not@2 commutes out of the window, so the two swaps are adjacent.
  const Diagram spread(3, {sw(0), neg(2), sw(0)});
  ASSERT_EQ(canonicalize(spread), spread);
  const auto m3 = find_matches(spread, rules());
  ASSERT_EQ(m3.size(), 1u);
  EXPECT_EQ(m3[0], match("p_swap2", 0, {0, 2}));

  EXPECT_TRUE(find_matches(Diagram(1, {neg(0)}), rules()).empty());
  EXPECT_TRUE(find_matches(Diagram::identity(5), rules()).empty());
}

TEST(rewrite, non_convex_occurrence_is_rejected) {
  // sw@1 sits between the two sw@0 on a dependency path.
  const Diagram d(3, {sw(0), sw(1), sw(0)});
  for (const Match& m : find_matches(d, rules())) EXPECT_NE(m.rule_name, "p_swap2");
  EXPECT_FALSE(is_valid_match(d, match("p_swap2", 0, {0, 2}), rules()));
}

TEST(rewrite, apply_match_examples) {
  EXPECT_EQ(apply_match(Diagram(2, {sw(0), sw(0)}), match("p_swap2", 0, {0, 1}), rules()),
            Diagram::identity(2));

  const Diagram step1 = apply_match(kRotation, match("s_t3_R", 0, {1, 2, 3, 4}), rules());
  EXPECT_EQ(step1, Diagram(4, {t3(0), t3(0), sw(2), sw(1), sw(0)}));
  const Diagram step2 = apply_match(step1, match("a_t3", 0, {0, 1}), rules());
  EXPECT_EQ(step2, Diagram(4, {sw(2), sw(1), sw(0)}));

  try {
    apply_match(step2, match("a_t3", 0, {0, 1}), rules());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::StaleMatch);
  }
}

TEST(rewrite, apply_match_moves_independent_predecessors_first) {
  // t2@2 precedes the second swap but is independent of the first one; the
  // rewrite must keep it before the contracted region.
  const Diagram d(4, {sw(0), neg(3), t2(2), sw(1), sw(0)});
  const Diagram c = canonicalize(d);
  bool found = false;
  for (const Match& m : find_matches(c, rules())) {
    const Diagram out = apply_match(c, m, rules());
    EXPECT_EQ(truth_table(out), truth_table(c)) << m.rule_name;
    EXPECT_EQ(map_compare(phi(out), phi(c)), MapOrder::Less) << m.rule_name;
    found = true;
  }
  EXPECT_TRUE(found);
}

TEST(rewrite, normalize_examples) {
  const auto id = normalize(Diagram::identity(3), rules());
  EXPECT_EQ(id.normal_form, Diagram::identity(3));
  EXPECT_TRUE(id.trace.steps.empty());

  const auto rot = normalize(kRotation, rules());
  EXPECT_EQ(rot.normal_form, Diagram(4, {sw(2), sw(1), sw(0)}));
  ASSERT_EQ(rot.trace.steps.size(), 2u);
  EXPECT_EQ(rot.trace.steps[0].match.rule_name, "s_t3_R");
  EXPECT_EQ(rot.trace.steps[1].match.rule_name, "a_t3");

  const auto triple = normalize(Diagram(2, {neg(0), neg(0), neg(0)}), rules());
  EXPECT_EQ(triple.normal_form, Diagram(2, {neg(0)}));
  EXPECT_EQ(triple.trace.steps.size(), 1u);

  const auto braid = normalize(kBraid, rules());
  EXPECT_TRUE(equivalent(braid.normal_form, Diagram(3, {sw(1), sw(0), sw(1), t2(1)})));
}

TEST(rewrite, normalize_prefers_rule_priority) {
  // p_swap2 is topmost, a_not is further down; annihilation goes first.
  const Diagram d(3, {sw(1), sw(1), neg(0), neg(0)});
  const auto r = normalize(d, rules());
  ASSERT_EQ(r.trace.steps.size(), 2u);
  EXPECT_EQ(r.trace.steps[0].match.rule_name, "a_not");
  EXPECT_EQ(r.trace.steps[1].match.rule_name, "p_swap2");
}

TEST(rewrite, step_limit) {
  NormalizeOptions options;
  options.step_limit = 1;
  try {
    normalize(kRotation, rules(), options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::StepLimitExceeded);
  }
  EXPECT_GE(default_step_limit(kRotation), 2u);
}

TEST(rewrite, all_normal_forms_examples) {
  EXPECT_EQ(all_normal_forms(Diagram(2, {sw(0), sw(0)}), rules(), 100),
            std::vector<Diagram>{Diagram::identity(2)});

  const auto nfs = all_normal_forms(kBraid, rules(), 1000);
  EXPECT_GE(nfs.size(), 2u);
  auto contains = [&](const Diagram& d) {
    return std::any_of(nfs.begin(), nfs.end(), [&](const Diagram& n) { return equivalent(n, d); });
  };
  EXPECT_TRUE(contains(Diagram(3, {sw(0), t2(0), sw(1), sw(0)})));
  EXPECT_TRUE(contains(Diagram(3, {sw(1), sw(0), sw(1), t2(1)})));
  for (const Diagram& nf : nfs) {
    EXPECT_EQ(truth_table(nf), truth_table(kBraid));
    EXPECT_TRUE(find_matches(nf, rules()).empty());
  }

  try {
    all_normal_forms(kBraid, rules(), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::StateLimitExceeded);
  }
}

TEST(rewrite, verify_trace_examples) {
  const auto rot = normalize(kRotation, rules());
  const TraceReport report = verify_trace(rot.trace);
  EXPECT_TRUE(report.ok());
  ASSERT_EQ(report.ranks.size(), 3u);
  EXPECT_GT(report.ranks[0], report.ranks[1]);
  EXPECT_GT(report.ranks[1], report.ranks[2]);

  EXPECT_TRUE(verify_trace(ReductionTrace{Diagram::identity(2), {}}).ok());

  ReductionTrace forged;
  forged.initial = rot.trace.steps[0].after;
  ReductionStep reversed = rot.trace.steps[0];
  std::swap(reversed.before, reversed.after);
  forged.steps.push_back(reversed);
  const TraceReport bad = verify_trace(forged);
  EXPECT_FALSE(bad.ok());
  EXPECT_EQ(bad.steps[0].measure, MapOrder::Greater);
  EXPECT_TRUE(bad.steps[0].semantics_preserved);
}

TEST(rewrite, format_trace) {
  const auto rot = normalize(kRotation, rules());
  const std::string text = format_trace(rot.trace);
  const Rank r0 = epsilon_rank(phi(kRotation));
  const Rank r1 = epsilon_rank(phi(rot.trace.steps[0].after));
  const Rank r2 = epsilon_rank(phi(rot.normal_form));
  std::ostringstream expected;
  expected << "step 1: s_t3_R @ wires[0] gates[1,2,3,4] rank " << r0 << " -> " << r1 << '\n'
           << "step 2: a_t3 @ wires[0] gates[0,1] rank " << r1 << " -> " << r2 << '\n';
  EXPECT_EQ(text, expected.str());
}

TEST(rewrite, matches_are_sound) {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 300; ++iter) {
    const Diagram d = canonicalize(oracle::random_swap_heavy(rng, 2 + rng() % 4, rng() % 12));
    for (const Match& m : find_matches(d, rules())) {
      const Rule& r = rules()[m.rule];
      std::vector<Gate> restricted;
      for (std::size_t h : m.gates) restricted.push_back(d[h].shifted(-static_cast<std::ptrdiff_t>(m.offset)));
      EXPECT_TRUE(equivalent(Diagram(r.width(), restricted), r.lhs)) << r.name;
      EXPECT_TRUE(is_valid_match(d, m, rules()));
    }
  }
}

TEST(rewrite, matcher_agrees_with_brute_force) {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 150; ++iter) {
    const Diagram d = canonicalize(oracle::random_swap_heavy(rng, 2 + rng() % 4, rng() % 9));
    std::set<oracle::MatchKey> ours;
    for (const Match& m : find_matches(d, rules())) ours.emplace(m.rule, m.gates, m.offset);
    EXPECT_EQ(ours, oracle::brute_force_matches(d, rules()));
  }
}

TEST(rewrite, rewrites_preserve_semantics_and_decrease_measure) {
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 200; ++iter) {
    const Diagram d = canonicalize(oracle::random_swap_heavy(rng, 2 + rng() % 4, rng() % 15));
    const TruthTable table = truth_table(d);
    const MoveMap measure = phi(d);
    for (const Match& m : find_matches(d, rules())) {
      const Diagram out = apply_match(d, m, rules());
      EXPECT_EQ(out.width(), d.width());
      EXPECT_EQ(truth_table(out), table);
      EXPECT_EQ(map_compare(phi(out), measure), MapOrder::Less);
    }
  }
}

TEST(rewrite, edges_invariant_under_exchange) {
  std::mt19937_64 rng(44);
  auto successors = [](const Diagram& d) {
    std::multiset<std::pair<std::string, Diagram>> out;
    const Diagram c = canonicalize(d);
    for (const Match& m : find_matches(c, rules())) out.emplace(m.rule_name, apply_match(c, m, rules()));
    return out;
  };
  for (int iter = 0; iter < 100; ++iter) {
    const Diagram d = oracle::random_swap_heavy(rng, 2 + rng() % 4, rng() % 8);
    const auto lins = oracle::linearizations(d);
    const auto& order = lins[rng() % lins.size()];
    std::vector<Gate> gates;
    for (std::size_t i : order) gates.push_back(d[i]);
    EXPECT_EQ(successors(d), successors(Diagram(d.width(), gates)));
  }
}

TEST(rewrite, normalize_random) {
  std::mt19937_64 rng(45);
  for (int iter = 0; iter < 100; ++iter) {
    const Diagram d = oracle::random_swap_heavy(rng, 1 + rng() % 6, rng() % 20);
    const auto r = normalize(d, rules());
    EXPECT_TRUE(find_matches(r.normal_form, rules()).empty());
    EXPECT_TRUE(verify_trace(r.trace).ok());
  }
}
