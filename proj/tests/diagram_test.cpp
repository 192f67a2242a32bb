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

#include "rbc/diagram.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "rbc/error.hpp"

using namespace rbc;

namespace {

Gate sw(std::size_t k) { return {GateKind::Swap, k}; }
Gate neg(std::size_t k) { return {GateKind::Not, k}; }
Gate t2(std::size_t k) { return {GateKind::T2, k}; }
Gate t3(std::size_t k) { return {GateKind::T3, k}; }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(diagram, validate) {
  const std::vector<Gate> exact{t3(0)};
  EXPECT_FALSE(validate(3, exact).has_value());
  EXPECT_EQ(validate(2, exact), std::optional<std::size_t>(0));
  const std::vector<Gate> past_end{sw(3)};
  EXPECT_EQ(validate(4, past_end), std::optional<std::size_t>(0));
  const std::vector<Gate> second_bad{neg(0), t2(1)};
  EXPECT_EQ(validate(2, second_bad), std::optional<std::size_t>(1));

  EXPECT_EQ(code_of([] { Diagram(2, {t3(0)}); }), ErrorCode::OutOfRange);
  EXPECT_NO_THROW(Diagram(0, {}));
}

TEST(diagram, compose_seq) {
  const Diagram s(2, {sw(0)});
  EXPECT_EQ(compose_seq(s, s), Diagram(2, {sw(0), sw(0)}));
  const Diagram d(3, {neg(1), t3(0)});
  EXPECT_EQ(compose_seq(Diagram::identity(3), d), d);
  EXPECT_EQ(code_of([] { compose_seq(Diagram::identity(2), Diagram::identity(3)); }),
            ErrorCode::WidthMismatch);
}

TEST(diagram, compose_par) {
  const Diagram n(1, {neg(0)});
  EXPECT_EQ(compose_par(n, n), Diagram(2, {neg(0), neg(1)}));
  const Diagram d(3, {sw(1), t3(0)});
  EXPECT_EQ(compose_par(Diagram::identity(0), d), d);
  EXPECT_EQ(compose_par(Diagram(2, {sw(0)}), Diagram::identity(1)), Diagram(3, {sw(0)}));
}

TEST(diagram, commute) {
  EXPECT_TRUE(commute(t2(0), t2(2)));
  EXPECT_FALSE(commute(sw(0), sw(1)));
  EXPECT_TRUE(commute(neg(1), t3(2)));
  EXPECT_EQ(support(t3(2)), (WireInterval{2, 5}));
}

TEST(diagram, canonicalize_examples) {
  EXPECT_EQ(canonicalize(Diagram(4, {t2(2), t2(0)})), Diagram(4, {t2(0), t2(2)}));
  EXPECT_EQ(canonicalize(Diagram(2, {sw(0), sw(0)})), Diagram(2, {sw(0), sw(0)}));
  // Oracle: the class of [not@2, sw@0, not@2] has three orderings;
  // the layered representative puts sw@0 beside the first not@2.
  const Diagram d(3, {neg(2), sw(0), neg(2)});
  ASSERT_EQ(oracle::linearizations(d).size(), 3u);
  EXPECT_EQ(canonicalize(d), Diagram(3, {sw(0), neg(2), neg(2)}));
  EXPECT_EQ(layer_of(d), (std::vector<std::size_t>{0, 0, 1}));
}

TEST(diagram, equivalent_examples) {
  EXPECT_TRUE(equivalent(Diagram(4, {t2(2), t2(0)}), Diagram(4, {t2(0), t2(2)})));
  EXPECT_FALSE(equivalent(Diagram(2, {sw(0), sw(0)}), Diagram::identity(2)));
  const Diagram d(3, {sw(0), t3(0), neg(2)});
  EXPECT_TRUE(equivalent(d, compose_seq(Diagram::identity(3), d)));
  EXPECT_FALSE(equivalent(Diagram::identity(2), Diagram::identity(3)));
}

TEST(diagram, dependency_dag_examples) {
  using Edges = std::vector<std::pair<std::size_t, std::size_t>>;
  EXPECT_EQ(dependency_dag(Diagram(2, {sw(0), sw(0)})).edges(), (Edges{{0, 1}}));
  EXPECT_TRUE(dependency_dag(Diagram(3, {neg(0), neg(2)})).edges().empty());
  const DependencyDag chain = dependency_dag(Diagram(3, {sw(0), sw(1), sw(0)}));
  EXPECT_EQ(chain.edges(), (Edges{{0, 1}, {1, 2}}));
  EXPECT_TRUE(chain.reaches(0, 2));
  EXPECT_FALSE(chain.reaches(2, 0));
  EXPECT_FALSE(chain.reaches(0, 0));
}

TEST(diagram, dag_reachability_matches_linearizations) {
  // i reaches j iff i precedes j in every linearization.
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    const Diagram d = oracle::random_diagram(rng, 1 + rng() % 5, rng() % 7);
    const auto lins = oracle::linearizations(d);
    const DependencyDag dag(d);
    for (std::size_t i = 0; i < d.size(); ++i) {
      for (std::size_t j = 0; j < d.size(); ++j) {
        if (i == j) continue;
        bool always_before = true;
        for (const auto& order : lins) {
          const auto pi = std::find(order.begin(), order.end(), i);
          const auto pj = std::find(order.begin(), order.end(), j);
          always_before = always_before && pi < pj;
        }
        EXPECT_EQ(dag.reaches(i, j), always_before) << i << "->" << j;
      }
    }
  }
}

TEST(diagram, canonical_form_properties) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t width = 1 + rng() % 5;
    const Diagram d = oracle::random_diagram(rng, width, rng() % 9);
    const Diagram c = canonicalize(d);
    EXPECT_EQ(canonicalize(c), c);
    EXPECT_TRUE(oracle::equivalent_by_search(d, c));

    // Agreement with the brute-force oracle on a random reordering, which
    // may or may not stay in the class.
    std::vector<Gate> shuffled = d.gates();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const Diagram e(width, shuffled);
    EXPECT_EQ(equivalent(d, e), oracle::equivalent_by_search(d, e));
  }
}

TEST(diagram, structural_laws_up_to_equivalence) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t w1 = 1 + rng() % 3;
    const std::size_t w2 = 1 + rng() % 3;
    const auto a = oracle::random_diagram(rng, w1, rng() % 4);
    const auto b = oracle::random_diagram(rng, w1, rng() % 4);
    const auto c = oracle::random_diagram(rng, w2, rng() % 4);
    const auto e = oracle::random_diagram(rng, w2, rng() % 4);
    const auto f = oracle::random_diagram(rng, w1, rng() % 4);

    EXPECT_TRUE(equivalent(compose_seq(compose_seq(a, b), f), compose_seq(a, compose_seq(b, f))));
    EXPECT_TRUE(equivalent(compose_par(compose_par(a, c), b), compose_par(a, compose_par(c, b))));
    // Exchange: (a;b) (x) (c;e) == (a (x) c) ; (b (x) e)
    EXPECT_TRUE(equivalent(compose_par(compose_seq(a, b), compose_seq(c, e)),
                           compose_seq(compose_par(a, c), compose_par(b, e))));
    // Equivalence is a congruence.
    const Diagram a2 = canonicalize(a);
    EXPECT_TRUE(equivalent(compose_seq(a2, b), compose_seq(a, b)));
    EXPECT_TRUE(equivalent(compose_par(c, a2), compose_par(c, a)));
  }
}
