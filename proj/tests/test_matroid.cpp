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
#include "rigidmp/matroid.hpp"
#include "support/matroid_bf.hpp"

using namespace rigidmp;

namespace {

Graph triangle() {
  Graph g;
  g.add_edge("e1", "1", "2");
  g.add_edge("e2", "2", "3");
  g.add_edge("e3", "3", "1");
  return g;
}

Graph parallel_pair() {
  Graph g;
  g.add_edge("e1", "1", "2");
  g.add_edge("e2", "1", "2");
  return g;
}

}  // namespace

TEST_CASE("ranks of basic matroids") {
  const LabelSet s{"a", "b", "c"};
  CHECK(free_matroid(s)->rank({"a", "c"}) == 2);
  CHECK(zero_matroid(s)->rank({"a", "c"}) == 0);
  CHECK(graphic_matroid(triangle())->full_rank() == 2);
  CHECK(cographic_matroid(triangle())->full_rank() == 1);
  CHECK_THROWS_AS(free_matroid(s)->is_independent({"z"}), std::invalid_argument);
}

TEST_CASE("dual rank identity") {
  CHECK(dual_rank_identity_check(*free_matroid({"a", "b"})));
  CHECK(dual_matroid(free_matroid({"a", "b"}))->full_rank() == 0);
  auto g = graphic_matroid(triangle());
  CHECK(dual_rank_identity_check(*g));
  CHECK(g->full_rank() + dual_matroid(g)->full_rank() == 3);
  gen::Rng rng(1);
  for (int it = 0; it < 10; ++it) {
    auto v = gen::space(rng, gen::labels("x", 6), 6);
    auto m = linear_matroid(v);
    CHECK(dual_rank_identity_check(*m));
    CHECK(m->full_rank() == v.rank());
    CHECK(dual_matroid(m)->full_rank() == 6 - v.rank());
  }
}

TEST_CASE("instances satisfy the matroid axioms") {
  gen::Rng rng(21);
  for (int it = 0; it < 15; ++it) {
    const Graph g = gen::multigraph(rng, gen::uniform(rng, 1, 4), gen::uniform(rng, 1, 6));
    auto gm = graphic_matroid(g);
    CHECK(bf::axioms_hold(*gm));
    CHECK(bf::axioms_hold(*cographic_matroid(g)));
    CHECK(bf::same_matroid(*dual_matroid(dual_matroid(gm)), *gm));
    CHECK(bf::same_matroid(*linear_matroid(kvl_space(g)), *gm));
    CHECK(bf::same_matroid(*cographic_matroid(g), *linear_matroid(kcl_space(g))));
    auto v = gen::space(rng, gen::labels("x", 5), 4);
    CHECK(bf::axioms_hold(*linear_matroid(v)));
    const LabelSet ground = g.edge_labels();
    if (ground.size() >= 3) {
      LabelSet t1(ground.begin(), ground.end() - 1);
      LabelSet t2(t1.begin() + 1, t1.end());
      CHECK(bf::axioms_hold(*minor_matroid(gm, t1, t2)));
    }
  }
  auto p = partition_matroid({{{"a", "b"}, 1}, {{"c", "d", "e"}, 2}});
  CHECK(bf::axioms_hold(*p));
  CHECK(p->full_rank() == 3);
  CHECK_THROWS_AS(partition_matroid({{{"a"}, 1}, {{"a"}, 1}}), std::invalid_argument);
}

TEST_CASE("union of graphic matroids") {
  auto fs = free_matroid({"a", "b", "c"});
  auto md = union_max_distant(fs, fs);
  CHECK(md.union_rank == 3);
  CHECK(md.b1 == LabelSet{"a", "b", "c"});
  CHECK(md.b2 == LabelSet{"a", "b", "c"});

  auto t = graphic_matroid(triangle());
  auto tt = union_max_distant(t, t);
  CHECK(tt.union_rank == 3);
  CHECK(set_union(tt.b1, tt.b2).size() == 3);
  CHECK(t->is_independent(tt.b1));
  CHECK(tt.b1.size() == 2);

  auto pz = union_max_distant(graphic_matroid(parallel_pair()), zero_matroid({"e1", "e2"}));
  CHECK(pz.union_rank == 1);
}

TEST_CASE("union rank matches brute force on random graphic pairs") {
  gen::Rng rng(55);
  for (int it = 0; it < 60; ++it) {
    const Graph g1 = gen::multigraph(rng, gen::uniform(rng, 1, 4), gen::uniform(rng, 1, 6), "e");
    Graph g2 = gen::multigraph(rng, gen::uniform(rng, 1, 4), gen::uniform(rng, 1, 6), "e");
    auto m1 = graphic_matroid(g1), m2 = graphic_matroid(g2);
    const LabelSet all = set_union(m1->ground(), m2->ground());
    const std::size_t brute = bf::union_rank(bf::graphic(g1), m1->ground(),
                                             bf::graphic(g2), m2->ground(), all);
    auto md = union_max_distant(m1, m2);
    CHECK(md.union_rank == brute);
    CHECK(set_union(md.b1, md.b2).size() == brute);
    CHECK(md.b1.size() == m1->full_rank());
    CHECK(md.b2.size() == m2->full_rank());
    CHECK(union_matroid({m1, m2})->full_rank() == brute);
    // Random subset ranks.
    LabelSet y;
    for (const auto& l : all) {
      if (gen::uniform(rng, 0, 1)) y.push_back(l);
    }
    CHECK(union_matroid({m1, m2})->rank(y) ==
          bf::union_rank(bf::graphic(g1), m1->ground(), bf::graphic(g2), m2->ground(), y));
  }
}

TEST_CASE("union base through a priority set") {
  auto t = graphic_matroid(triangle());
  auto any = union_base_through(t, t, {});
  CHECK(any.base.size() == 3);
  auto all = union_base_through(t, t, t->ground());
  CHECK(all.base == t->ground());
  CHECK(disjoint(all.part1, all.part2));

  gen::Rng rng(13);
  for (int it = 0; it < 40; ++it) {
    // M_SP on s*, p* and M_PQ on p*, q* as graphic matroids.
    Graph g1, g2;
    const int n1 = gen::uniform(rng, 2, 4), n2 = gen::uniform(rng, 2, 4);
    for (int i = 0; i < 4; ++i) {
      const std::string name = (i < 2 ? "s" : "p") + std::to_string(i);
      g1.add_edge(name, "n" + std::to_string(gen::uniform(rng, 0, n1 - 1)),
                  "n" + std::to_string(gen::uniform(rng, 0, n1 - 1)));
    }
    for (int i = 2; i < 6; ++i) {
      const std::string name = (i < 4 ? "p" : "q") + std::to_string(i);
      g2.add_edge(name, "m" + std::to_string(gen::uniform(rng, 0, n2 - 1)),
                  "m" + std::to_string(gen::uniform(rng, 0, n2 - 1)));
    }
    auto sp = graphic_matroid(g1), pq = graphic_matroid(g2);
    const LabelSet p{"p2", "p3"};
    auto ub = union_base_through(sp, pq, p);
    auto link = linking(sp, pq);
    const LabelSet rest = set_difference(ub.base, p);
    CHECK(link->is_independent(rest));
    CHECK(rest.size() == link->full_rank());
    // Brute-force linking rank: r_v(S u P u Q) - r_v(P).
    const LabelSet all = set_union(sp->ground(), pq->ground());
    const std::size_t brute =
        bf::union_rank(bf::graphic(g1), sp->ground(), bf::graphic(g2), pq->ground(), all) -
        bf::union_rank(bf::graphic(g1), sp->ground(), bf::graphic(g2), pq->ground(), p);
    CHECK(link->full_rank() == brute);
  }
}

TEST_CASE("linking with free and zero matroids") {
  gen::Rng rng(71);
  for (int it = 0; it < 20; ++it) {
    Graph g = gen::multigraph(rng, 3, 5, "x");
    auto m = graphic_matroid(g);
    const LabelSet p{"x3", "x4"};
    const LabelSet s{"x0", "x1", "x2"};
    CHECK(bf::same_matroid(*linking(m, free_matroid(p)), *restrict_matroid(m, s)));
    CHECK(bf::same_matroid(*linking(m, zero_matroid(p)), *contract_matroid(m, s)));
  }
}

TEST_CASE("matroid identities by brute force") {
  gen::Rng rng(909);
  for (int it = 0; it < 25; ++it) {
    const Graph g1 = gen::multigraph(rng, gen::uniform(rng, 2, 4), 6, "x");
    const Graph g2 = gen::multigraph(rng, gen::uniform(rng, 2, 4), 6, "x");
    auto m = graphic_matroid(g1), n = graphic_matroid(g2);
    const LabelSet ground = m->ground();
    // r(M) + r(N) = r(M v N) + r(M ^ N).
    CHECK(m->full_rank() + n->full_rank() ==
          union_matroid({m, n})->full_rank() + intersection_matroid(m, n)->full_rank());
    // (M v N)* = M* ^ N*.
    CHECK(bf::same_matroid(*dual_matroid(union_matroid({m, n})),
                           *intersection_matroid(dual_matroid(m), dual_matroid(n))));
    // Minor-dual exchange.
    const LabelSet s{"x0", "x1", "x2"};
    const LabelSet p{"x3", "x4", "x5"};
    CHECK(bf::same_matroid(*restrict_matroid(dual_matroid(m), p),
                           *dual_matroid(contract_matroid(m, p))));
    CHECK(bf::same_matroid(*contract_matroid(dual_matroid(m), s),
                           *dual_matroid(restrict_matroid(m, s))));
  }
}

TEST_CASE("implicit duality and linking rank formula") {
  gen::Rng rng(3131);
  for (int it = 0; it < 25; ++it) {
    Graph g1, g2;
    for (int i = 0; i < 5; ++i) {
      const std::string name = (i < 3 ? "s" : "p") + std::to_string(i);
      g1.add_edge(name, "n" + std::to_string(gen::uniform(rng, 0, 3)),
                  "n" + std::to_string(gen::uniform(rng, 0, 3)));
    }
    for (int i = 3; i < 7; ++i) {
      const std::string name = (i < 5 ? "p" : "q") + std::to_string(i);
      g2.add_edge(name, "m" + std::to_string(gen::uniform(rng, 0, 2)),
                  "m" + std::to_string(gen::uniform(rng, 0, 2)));
    }
    auto sp = graphic_matroid(g1), pq = graphic_matroid(g2);
    CHECK(bf::same_matroid(*dual_matroid(linking(sp, pq)),
                           *linking(dual_matroid(sp), dual_matroid(pq))));
    const LabelSet s{"s0", "s1", "s2"}, p{"p3", "p4"}, q{"q5", "q6"};
    const std::size_t rhs =
        contract_matroid(sp, s)->full_rank() + contract_matroid(pq, q)->full_rank() +
        intersection_matroid(restrict_matroid(sp, p), restrict_matroid(pq, p))->full_rank() -
        intersection_matroid(contract_matroid(sp, p), contract_matroid(pq, p))->full_rank();
    CHECK(linking(sp, pq)->full_rank() == rhs);
  }
}

TEST_CASE("rigid matroid pairs") {
  auto r = matroid_pair_rigid(free_matroid({"a"}), free_matroid({"c"}));
  CHECK(r.rigid);
  auto r2 = matroid_pair_rigid(free_matroid({"a", "b"}), zero_matroid({"b"}));
  CHECK(r2.rigid);
  REQUIRE(r2.bases);
  CHECK(r2.bases->first == LabelSet{"a", "b"});
  CHECK(r2.bases->second.empty());
  auto r3 = matroid_pair_rigid(zero_matroid({"a", "b"}), zero_matroid({"b"}));
  CHECK_FALSE(r3.rigid);
  CHECK_FALSE(r3.full_sum);
  CHECK(r3.zero_intersection);
  auto r4 = matroid_pair_rigid(free_matroid({"b"}), free_matroid({"b"}));
  CHECK_FALSE(r4.rigid);
  CHECK(r4.full_sum);
  CHECK_FALSE(r4.zero_intersection);
}

TEST_CASE("rigidity agrees with brute-force disjoint bases") {
  gen::Rng rng(66);
  for (int it = 0; it < 60; ++it) {
    Graph g1, g2;
    for (int i = 0; i < 5; ++i) {
      const std::string name = (i < 2 ? "a" : "b") + std::to_string(i);
      g1.add_edge(name, "n" + std::to_string(gen::uniform(rng, 0, 3)),
                  "n" + std::to_string(gen::uniform(rng, 0, 3)));
    }
    for (int i = 2; i < 6; ++i) {
      const std::string name = (i < 5 ? "b" : "c") + std::to_string(i);
      g2.add_edge(name, "m" + std::to_string(gen::uniform(rng, 0, 3)),
                  "m" + std::to_string(gen::uniform(rng, 0, 3)));
    }
    auto ab = graphic_matroid(g1), bc = graphic_matroid(g2);
    const LabelSet b{"b2", "b3", "b4"};
    bool brute = false;
    for (const auto& x : bf::bases_within(bf::graphic(g1), ab->ground())) {
      for (const auto& y : bf::bases_within(bf::graphic(g2), bc->ground())) {
        if (disjoint(x, y) && is_subset(b, set_union(x, y))) brute = true;
      }
    }
    auto res = matroid_pair_rigid(ab, bc);
    CHECK(res.rigid == brute);
    if (res.rigid) {
      REQUIRE(res.bases);
      CHECK(disjoint(res.bases->first, res.bases->second));
      CHECK(is_subset(b, set_union(res.bases->first, res.bases->second)));
      CHECK(res.bases->first.size() == ab->full_rank());
      CHECK(res.bases->second.size() == bc->full_rank());
    }
    CHECK(matroid_pair_rigid(dual_matroid(ab), dual_matroid(bc)).rigid == res.rigid);
  }
}

TEST_CASE("matroid families") {
  auto single = matroid_family_rigid({graphic_matroid(triangle())});
  CHECK(single.rigid);
  auto apart = matroid_family_rigid({free_matroid({"a"}), zero_matroid({"b"})});
  CHECK(apart.rigid);
  std::vector<MatroidPtr> h{
      free_matroid({"e1", "e3", "e5", "e7"}), free_matroid({"e3", "e5", "e7"}),
      free_matroid({"e9"}), free_matroid({"e2", "e4", "e6", "e8"}),
      free_matroid({"e2", "e4", "e8"}), free_matroid({})};
  CHECK_NOTHROW(family_linking(h));
  CHECK(family_linking(h)->ground() == LabelSet{"e1", "e6", "e9"});
  CHECK_THROWS(family_linking({free_matroid({"a"}), free_matroid({"a"}), free_matroid({"a"})}));
  // A two-member family is a pair.
  gen::Rng rng(5);
  for (int it = 0; it < 20; ++it) {
    auto m1 = graphic_matroid(gen::multigraph(rng, 3, 4, "x"));
    Graph g;
    for (int i = 2; i < 6; ++i) {
      g.add_edge("x" + std::to_string(i), "m" + std::to_string(gen::uniform(rng, 0, 2)),
                 "m" + std::to_string(gen::uniform(rng, 0, 2)));
    }
    auto m2 = graphic_matroid(g);
    CHECK(matroid_family_rigid({m1, m2}).rigid == matroid_pair_rigid(m1, m2).rigid);
    CHECK(bf::same_matroid(*family_linking({m1, m2}), *linking(m1, m2)));
  }
}

TEST_CASE("relabeled and direct sum matroids") {
  auto g = graphic_matroid(triangle());
  auto r = relabeled_matroid(g, {{"e1", "f1"}, {"e2", "f2"}, {"e3", "f3"}});
  CHECK(r->ground() == LabelSet{"f1", "f2", "f3"});
  CHECK_FALSE(r->is_independent({"f1", "f2", "f3"}));
  CHECK(r->is_independent({"f1", "f3"}));
  auto d = direct_sum_matroid(g, r);
  CHECK(d->full_rank() == 4);
  CHECK(bf::axioms_hold(*d));
  CHECK_THROWS(direct_sum_matroid(g, g));
  CHECK_THROWS(relabeled_matroid(g, {{"e1", "e2"}}));
}
