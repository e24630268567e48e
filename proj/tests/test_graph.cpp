// Copyright 2026 The Authors.
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

#include "doctest.h"
#include "rigidmp/graph.hpp"
#include "support/graph_gen.hpp"

using namespace rigidmp;

namespace {

Graph triangle() {
  Graph g;
  g.add_edge("e1", "1", "2");
  g.add_edge("e2", "2", "3");
  g.add_edge("e3", "3", "1");
  return g;
}

// Wheatstone bridge: source s across a-c, detector d across b-e.
Graph bridge() {
  Graph g;
  g.add_edge("s", "c", "a");
  g.add_edge("r1", "a", "b");
  g.add_edge("r2", "a", "e");
  g.add_edge("r3", "b", "c");
  g.add_edge("r4", "e", "c");
  g.add_edge("d", "b", "e");
  return g;
}

RowVector row(std::initializer_list<long> xs) {
  RowVector r;
  for (long x : xs) r.push_back(Rational(x));
  return r;
}

}  // namespace

TEST_CASE("voltage and current spaces of small graphs") {
  Graph loop;
  loop.add_edge("e", "1", "1");
  CHECK(kvl_space(loop) == VectorSpace::zero({"e"}));
  CHECK(kcl_space(loop) == VectorSpace::full({"e"}));

  Graph par;
  par.add_edge("e1", "1", "2");
  par.add_edge("e2", "1", "2");
  CHECK(kvl_space(par) == VectorSpace::from_rows({"e1", "e2"}, {row({1, 1})}));
  CHECK(kcl_space(par) == VectorSpace::from_rows({"e1", "e2"}, {row({1, -1})}));

  CHECK(kvl_space(triangle()).rank() == 2);
  CHECK(kcl_space(triangle()).rank() == 1);
}

TEST_CASE("duplicate edge labels are rejected") {
  Graph g;
  g.add_edge("e", "1", "2");
  CHECK_THROWS_AS(g.add_edge("e", "2", "3"), std::invalid_argument);
}

TEST_CASE("graph minors") {
  Graph g = triangle();
  g.add_edge("b", "3", "4");
  g.add_edge("l", "4", "4");
  const LabelSet all = g.edge_labels();
  // Contract a bridge.
  CHECK(kvl_space(minor(g, {}, {"b"})) ==
        contract_to(kvl_space(g), set_difference(all, {"b"})));
  // Delete a self-loop.
  CHECK(kvl_space(minor(g, {"l"}, {})) ==
        restrict_to(kvl_space(g), set_difference(all, {"l"})));

  Graph t = contract_graph(triangle(), {"e1", "e2"});
  REQUIRE(t.edges().size() == 2);
  // e1 and e2 become parallel (oppositely oriented) edges.
  CHECK(t.edges()[0].tail == t.edges()[1].head);
  CHECK(t.edges()[0].head == t.edges()[1].tail);
  CHECK(t.edges()[0].tail != t.edges()[0].head);
  CHECK_THROWS_AS(minor(g, {"b"}, {"b"}), std::invalid_argument);
  CHECK_THROWS_AS(minor(g, {"zz"}, {}), std::invalid_argument);
}

TEST_CASE("constrained forests") {
  Graph g = triangle();
  CHECK(constrained_forest(g, {"e3"}, {}).size() == 2);

  Graph par;
  par.add_edge("e1", "1", "2");
  par.add_edge("e2", "1", "2");
  try {
    constrained_forest(par, {"e1", "e2"}, {});
    FAIL("expected loop");
  } catch (const ForestError& e) {
    CHECK(e.kind() == ForestError::Kind::kLoopInInclude);
    CHECK(e.witness() == LabelSet{"e1", "e2"});
  }

  Graph b = bridge();
  const auto t = constrained_forest(b, {"s"}, {"d"});
  CHECK(t.size() == 3);
  CHECK(contains(t, "s"));
  CHECK_FALSE(contains(t, "d"));
  // K4 has 16 trees; 8 contain s, and 4 of those avoid d.
  int with_s = 0;
  int count = 0;
  bool seen = false;
  for (const auto& tree : gen::bf_trees(b)) {
    with_s += contains(tree, "s");
    if (contains(tree, "s") && !contains(tree, "d")) {
      ++count;
      seen = seen || tree == t;
    }
  }
  CHECK(gen::bf_trees(b).size() == 16);
  CHECK(with_s == 8);
  CHECK(count == 4);
  CHECK(seen);

  try {
    constrained_forest(b, {}, {"r1", "r2", "s"});
    FAIL("expected cutset");
  } catch (const ForestError& e) {
    CHECK(e.kind() == ForestError::Kind::kCutsetInAvoid);
    CHECK(e.witness() == LabelSet{"r1", "r2", "s"});
  }
}

TEST_CASE("loop-free and cutset-free") {
  Graph g = triangle();
  g.add_edge("b", "3", "4");
  g.add_edge("l", "1", "1");
  CHECK(is_loop_free(g, {}));
  CHECK(is_cutset_free(g, {}));
  CHECK_FALSE(is_loop_free(g, {"l"}));
  CHECK(find_loop(g, {"l"}) == LabelSet{"l"});
  CHECK_FALSE(is_cutset_free(g, {"b"}));
  CHECK(find_cutset(g, {"b", "e1"}) == LabelSet{"b"});
  CHECK(find_loop(g, {"e1", "e2", "e3", "b"}) == LabelSet{"e1", "e2", "e3"});
}

TEST_CASE("Tellegen and bases on random multigraphs") {
  gen::Rng rng(31);
  for (int it = 0; it < 60; ++it) {
    const Graph g = gen::multigraph(rng, gen::uniform(rng, 1, 5), gen::uniform(rng, 1, 7));
    const auto v = kvl_space(g);
    const auto i = kcl_space(g);
    CHECK(i == orthocomplement(v));
    CHECK(v.rank() == graph_rank(g));
    const auto trees = gen::bf_trees(g);
    std::size_t bases = 0;
    for (const auto& x : gen::subsets(g.edge_labels())) {
      const bool vb = is_column_base(v, x);
      const bool is_tree = std::find(trees.begin(), trees.end(), x) != trees.end();
      CHECK(vb == is_tree);
      const bool cob = is_column_base(i, set_difference(g.edge_labels(), x));
      CHECK(cob == is_tree);
      bases += vb;
    }
    CHECK(bases == trees.size());
  }
}

TEST_CASE("fundamental circuits and cutsets lie in the right spaces") {
  gen::Rng rng(8);
  for (int it = 0; it < 40; ++it) {
    const Graph g = gen::multigraph(rng, gen::uniform(rng, 1, 6), gen::uniform(rng, 1, 9));
    const auto v = kvl_space(g), i = kcl_space(g);
    const auto f = spanning_forest(g);
    const auto cols = g.edge_labels();
    auto vec = [&](const SignedEdges& s) {
      RowVector r(cols.size(), Rational(0));
      for (const auto& [l, x] : s) r[v.index_of(l)] += x;
      return r;
    };
    for (const auto& [c, s] : fundamental_circuits(g, f)) CHECK(i.contains_vector(vec(s)));
    for (const auto& [t, s] : fundamental_cutsets(g, f)) CHECK(v.contains_vector(vec(s)));
    CHECK(fundamental_cutsets(g, f).size() == v.rank());
  }
}

TEST_CASE("minor correspondence and commutation") {
  gen::Rng rng(77);
  for (int it = 0; it < 60; ++it) {
    const Graph g = gen::multigraph(rng, gen::uniform(rng, 2, 5), gen::uniform(rng, 2, 8));
    const LabelSet all = g.edge_labels();
    LabelSet t, w;
    for (const auto& l : all) {
      if (gen::uniform(rng, 0, 3) > 0) t.push_back(l);
    }
    for (const auto& l : t) {
      if (gen::uniform(rng, 0, 2) > 0) w.push_back(l);
    }
    const auto v = kvl_space(g), i = kcl_space(g);
    CHECK(kvl_space(restrict_graph(g, t)) == restrict_to(v, t));
    CHECK(kvl_space(contract_graph(g, t)) == contract_to(v, t));
    CHECK(kcl_space(contract_graph(g, t)) == restrict_to(i, t));
    CHECK(kcl_space(restrict_graph(g, t)) == contract_to(i, t));
    // G o T x W
    const Graph gtw = contract_graph(restrict_graph(g, t), w);
    CHECK(kvl_space(gtw) == contract_to(restrict_to(v, t), w));
    // Deletion and contraction commute.
    const LabelSet a = set_difference(all, t);
    const LabelSet b = set_difference(t, w);
    const Graph x = minor(minor(g, a, {}), {}, b);
    const Graph y = minor(minor(g, {}, b), a, {});
    CHECK(kvl_space(x) == kvl_space(y));
    CHECK(kvl_space(x) == kvl_space(minor(g, a, b)));
  }
}

TEST_CASE("forest witnesses are minimal") {
  gen::Rng rng(4);
  for (int it = 0; it < 80; ++it) {
    const Graph g = gen::multigraph(rng, gen::uniform(rng, 2, 5), gen::uniform(rng, 2, 8));
    LabelSet t;
    for (const auto& l : g.edge_labels()) {
      if (gen::uniform(rng, 0, 1)) t.push_back(l);
    }
    const auto loop = find_loop(g, t);
    CHECK(loop.empty() == gen::bf_forest(g, t));
    if (!loop.empty()) {
      CHECK(is_subset(loop, t));
      CHECK_FALSE(gen::bf_forest(g, loop));
      for (const auto& l : loop) CHECK(gen::bf_forest(g, set_difference(loop, {l})));
    }
    const auto cut = find_cutset(g, t);
    const std::size_t r = graph_rank(g);
    CHECK(cut.empty() == (graph_rank(minor(g, t, {})) == r));
    if (!cut.empty()) {
      CHECK(is_subset(cut, t));
      CHECK(graph_rank(minor(g, cut, {})) < r);
      for (const auto& l : cut) {
        CHECK(graph_rank(minor(g, set_difference(cut, {l}), {})) == r);
      }
    }
  }
}
