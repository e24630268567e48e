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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rigidmp/cli.hpp"
#include "rigidmp/family.hpp"
#include "rigidmp/matroid.hpp"
#include "rigidmp/multiport.hpp"
#include "rigidmp/portxform.hpp"
#include "rigidmp/rigidity.hpp"
#include "support/circuit_gen.hpp"
#include "support/family_gen.hpp"
#include "support/matroid_bf.hpp"
#include "support/oracles.hpp"

using namespace rigidmp;

namespace {

struct Tally {
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok) {
      if (failures == 0) first_failure = what;
      ++failures;
    }
  }
};

std::vector<Label> vec(const LabelSet& s) { return {s.begin(), s.end()}; }

std::vector<Label> pick(gen::Rng& rng, const LabelSet& from, int keep_one_in) {
  std::vector<Label> out;
  for (const auto& l : from) {
    if (gen::uniform(rng, 1, keep_one_in) != 1) out.push_back(l);
  }
  return out;
}

// Random pair V_SP, V_PQ with at most 8 columns each.
std::pair<VectorSpace, VectorSpace> random_pair(gen::Rng& rng, LabelSet& s, LabelSet& p,
                                                LabelSet& q) {
  const int ns = gen::uniform(rng, 0, 4), np = gen::uniform(rng, 1, 4),
            nq = gen::uniform(rng, 0, 4);
  s = make_set(gen::labels("s", ns));
  p = make_set(gen::labels("p", np));
  q = make_set(gen::labels("q", nq));
  auto sp = gen::space(rng, gen::concat(vec(s), vec(p)), ns + np);
  auto pq = gen::space(rng, gen::concat(vec(p), vec(q)), np + nq);
  return {sp, pq};
}

Tally implicit_duality() {
  Tally t;
  gen::Rng rng(1001);
  for (int it = 0; it < 250; ++it) {
    LabelSet s, p, q;
    const auto [sp, pq] = random_pair(rng, s, p, q);
    const VectorSpace lhs = orthocomplement(matched(sp, pq));
    const VectorSpace rhs = skewed(orthocomplement(sp), orthocomplement(pq));
    t.check(lhs == rhs, "library identity, instance " + std::to_string(it));
    const auto o = oracle::perp(oracle::matched(oracle::of(sp), oracle::of(pq)));
    t.check(oracle::same_space(lhs, o), "oracle comparison, instance " + std::to_string(it));
  }
  return t;
}

std::size_t graphic_rank(const Graph& g, const LabelSet& x) {
  return bf::rank(bf::graphic(g), x);
}

Tally rank_formulas() {
  Tally t;
  gen::Rng rng(1002);
  for (int it = 0; it < 250; ++it) {
    LabelSet s, p, q;
    const auto [sp, pq] = random_pair(rng, s, p, q);
    const auto osp = oracle::of(sp), opq = oracle::of(pq);
    const std::size_t lhs = oracle::rank(oracle::matched(osp, opq));
    const std::size_t rhs =
        oracle::rank(oracle::contract_to(osp, vec(s))) +
        oracle::rank(oracle::contract_to(opq, vec(q))) +
        oracle::rank(oracle::intersect(oracle::restrict_to(osp, vec(p)),
                                       oracle::restrict_to(opq, vec(p)))) -
        oracle::rank(oracle::intersect(oracle::contract_to(osp, vec(p)),
                                       oracle::contract_to(opq, vec(p))));
    t.check(lhs == rhs, "vector rank formula, instance " + std::to_string(it));
    t.check(matched(sp, pq).rank() == lhs, "library matched rank, instance " + std::to_string(it));
  }
  // Graphic matroids on at most 8 elements.
  for (int it = 0; it < 120; ++it) {
    const int ns = gen::uniform(rng, 1, 3), np = gen::uniform(rng, 1, 3),
              nq = gen::uniform(rng, 1, 2);
    Graph g1, g2;
    const int nv1 = gen::uniform(rng, 2, 4), nv2 = gen::uniform(rng, 2, 4);
    const auto node = [&](const std::string& pre, int nv) {
      return pre + std::to_string(gen::uniform(rng, 0, nv - 1));
    };
    std::vector<Label> sl, pl, ql;
    for (int i = 0; i < ns; ++i) sl.emplace_back("s" + std::to_string(i));
    for (int i = 0; i < np; ++i) pl.emplace_back("p" + std::to_string(i));
    for (int i = 0; i < nq; ++i) ql.emplace_back("q" + std::to_string(i));
    for (const auto& l : gen::concat(sl, pl)) g1.add_edge(l, node("n", nv1), node("n", nv1));
    for (const auto& l : gen::concat(pl, ql)) g2.add_edge(l, node("m", nv2), node("m", nv2));
    const LabelSet s = make_set(sl), p = make_set(pl), q = make_set(ql);
    const LabelSet sps = set_union(s, p), pqs = set_union(p, q);
    const auto i1 = bf::graphic(g1), i2 = bf::graphic(g2);

    const LabelSet all = set_union(sps, q);
    const std::size_t lhs = bf::union_rank(i1, sps, i2, pqs, all) -
                            bf::union_rank(i1, sps, i2, pqs, p);
    // Minors and wedges by brute force.
    const auto contraction = [&](const bf::Indep& ind, const LabelSet& ground,
                                 const LabelSet& keep) -> bf::Indep {
      const LabelSet rest = set_difference(ground, keep);
      const std::size_t r = bf::rank(ind, rest);
      return [=](const LabelSet& x) {
        return bf::rank(ind, set_union(x, rest)) == r + x.size();
      };
    };
    const auto dual = [&](const bf::Indep& ind, const LabelSet& ground) -> bf::Indep {
      const std::size_t r = bf::rank(ind, ground);
      return [=](const LabelSet& x) { return bf::rank(ind, set_difference(ground, x)) == r; };
    };
    const auto wedge_rank = [&](const bf::Indep& a, const bf::Indep& b, const LabelSet& ground) {
      return ground.size() - bf::union_rank(dual(a, ground), ground, dual(b, ground), ground, ground);
    };
    const std::size_t rhs =
        bf::rank(contraction(i1, sps, s), s) + bf::rank(contraction(i2, pqs, q), q) +
        wedge_rank(i1, i2, p) -
        wedge_rank(contraction(i1, sps, p), contraction(i2, pqs, p), p);
    t.check(lhs == rhs, "matroid rank formula, instance " + std::to_string(it));
    const auto link = linking(graphic_matroid(g1), graphic_matroid(g2));
    t.check(link->full_rank() == lhs, "library linking rank, instance " + std::to_string(it));
    (void)graphic_rank;
  }
  return t;
}

Tally tellegen_minors() {
  Tally t;
  gen::Rng rng(1003);
  for (int it = 0; it < 150; ++it) {
    const Graph g = gen::multigraph(rng, gen::uniform(rng, 1, 6), gen::uniform(rng, 1, 10));
    const auto v = kvl_space(g), i = kcl_space(g);
    const std::string tag = ", graph " + std::to_string(it);
    t.check(oracle::same_space(i, oracle::perp(oracle::of(v))), "kcl = kvl perp" + tag);
    const LabelSet tt = make_set(pick(rng, g.edge_labels(), 4));
    const LabelSet w = make_set(pick(rng, tt, 3));
    const auto ov = oracle::of(v), oi = oracle::of(i);
    t.check(oracle::same_space(kvl_space(restrict_graph(g, tt)), oracle::restrict_to(ov, vec(tt))),
            "V(G o T)" + tag);
    t.check(oracle::same_space(kvl_space(contract_graph(g, tt)), oracle::contract_to(ov, vec(tt))),
            "V(G x T)" + tag);
    t.check(oracle::same_space(kcl_space(restrict_graph(g, tt)), oracle::contract_to(oi, vec(tt))),
            "I(G o T)" + tag);
    t.check(oracle::same_space(kcl_space(contract_graph(g, tt)), oracle::restrict_to(oi, vec(tt))),
            "I(G x T)" + tag);
    const Graph gtw = contract_graph(restrict_graph(g, tt), w);
    t.check(oracle::same_space(kvl_space(gtw),
                               oracle::contract_to(oracle::restrict_to(ov, vec(tt)), vec(w))),
            "V(G o T x W)" + tag);
    t.check(oracle::same_space(kcl_space(gtw),
                               oracle::restrict_to(oracle::contract_to(oi, vec(tt)), vec(w))),
            "I(G o T x W)" + tag);
  }
  return t;
}

Tally matroid_union() {
  Tally t;
  gen::Rng rng(1004);
  for (int it = 0; it < 400; ++it) {
    const Graph g1 = gen::multigraph(rng, gen::uniform(rng, 1, 5), gen::uniform(rng, 1, 7), "e");
    const Graph g2 = gen::multigraph(rng, gen::uniform(rng, 1, 5), gen::uniform(rng, 1, 7), "e");
    const auto m1 = graphic_matroid(g1), m2 = graphic_matroid(g2);
    const LabelSet all = set_union(m1->ground(), m2->ground());
    // Brute force over all base pairs.
    std::size_t brute = 0;
    for (const auto& b1 : bf::bases_within(bf::graphic(g1), m1->ground())) {
      for (const auto& b2 : bf::bases_within(bf::graphic(g2), m2->ground())) {
        brute = std::max(brute, set_union(b1, b2).size());
      }
    }
    const auto md = union_max_distant(m1, m2);
    t.check(md.union_rank == brute, "union rank, pair " + std::to_string(it));
    t.check(union_matroid({m1, m2})->rank(all) == brute, "union matroid rank, pair " + std::to_string(it));
  }
  return t;
}

Tally rigidity_equivalences() {
  Tally t;
  gen::Rng rng(1005);
  for (int it = 0; it < 250; ++it) {
    const auto wl = gen::labels("w", gen::uniform(rng, 0, 3));
    const auto tl = gen::labels("t", gen::uniform(rng, 0, 3));
    const auto vl = gen::labels("v", gen::uniform(rng, 0, 3));
    const auto wtv = gen::space(rng, gen::concat(gen::concat(wl, tl), vl), 8);
    const auto vt = gen::space(rng, tl, 3), vv = gen::space(rng, vl, 3);
    const auto s = derived_rigidity_split(wtv, vt, vv);
    t.check(s.combined.rigid == (s.pair1.rigid && s.pair2.rigid),
            "derived split, instance " + std::to_string(it));
  }
  for (int it = 0; it < 250; ++it) {
    const int na = gen::uniform(rng, 0, 3), nb = gen::uniform(rng, 1, 3), nc = gen::uniform(rng, 0, 3);
    const auto a = gen::labels("a", na), b = gen::labels("b", nb), c = gen::labels("c", nc);
    const auto vab = gen::space(rng, gen::concat(a, b), na + nb);
    const auto vbc = gen::space(rng, gen::concat(b, c), nb + nc);
    t.check(pair_rigid(vab, vbc).rigid ==
                pair_rigid(orthocomplement(vab), orthocomplement(vbc)).rigid,
            "dual pair, instance " + std::to_string(it));
  }
  for (int it = 0; it < 120; ++it) {
    const int n = gen::uniform(rng, 3, 5);
    const auto h = gen::assoc_family(rng, n);
    std::vector<std::vector<std::size_t>> part(gen::uniform(rng, 1, n));
    for (int i = 0; i < n; ++i) {
      part[i < static_cast<int>(part.size()) ? i : gen::uniform(rng, 0, part.size() - 1)]
          .push_back(i);
    }
    t.check(family_rigid_recursive(h, part).rigid == family_rigid(h).rigid,
            "recursive family, instance " + std::to_string(it));
  }
  return t;
}

Tally circuit_rigidity() {
  Tally t;
  gen::Rng rng(1006);
  for (int it = 0; it < 60; ++it) {
    const auto n = gen::sufficient_multiport(rng, gen::uniform(rng, 2, 6), gen::uniform(rng, 1, 4),
                                             gen::uniform(rng, 0, 3));
    const std::string tag = ", multiport " + std::to_string(it);
    if (!sufficiency_check(n).pass) {
      t.check(false, "generator produced an insufficient multiport" + tag);
      continue;
    }
    const HybridRep h = hybrid_rep(n);
    std::vector<Label> sources;
    for (const auto& d : n.devices) {
      if (d.kind == DeviceKind::kVSource || d.kind == DeviceKind::kISource) sources.push_back(d.edge);
    }
    for (int k = 0; k < 10; ++k) {
      std::map<Label, Rational> values;
      for (const auto& s : sources) values[s] = gen::small_rational(rng);
      PortAssignment pa;
      for (const auto& p : h.p1) pa[primed(p)] = gen::small_rational(rng);
      for (const auto& p : h.p2) pa[double_primed(p)] = gen::small_rational(rng);
      t.check(solve(with_sources(n, values), pa).status == SolveStatus::kUnique,
              "(a) unique solve" + tag);
    }
    const auto beh = port_behaviour(n);
    t.check(beh.has_value(), "behaviour nonvoid" + tag);
    if (!beh) continue;
    t.check(beh->translate().rank() == n.ports.size(), "(b) behaviour rank |P|" + tag);
    t.check(hybrid_space(h) == *beh, "(c) hybrid reconstruction" + tag);
    const auto m = matroidal_rigidity(n);
    const LabelSet x = set_union(primed(n.internal_edges()), double_primed(n.internal_edges()));
    const bool cover = m.bases && disjoint(m.bases->first, m.bases->second) &&
                       is_subset(x, set_union(m.bases->first, m.bases->second));
    t.check(m.rigid && cover, "(d) matroidal rigid with disjoint covering bases" + tag);
  }
  return t;
}

Tally necessity_violations() {
  using gen::isrc;
  using gen::res;
  using gen::vsrc;
  Tally t;
  const std::vector<Multiport> bad = {
      gen::network({{"e1", "a", "b"}, {"e2", "a", "b"}, {"r", "a", "b"}}, {},
                   {vsrc("e1", 1), vsrc("e2", 1), res("r", 1)}),
      gen::network({{"j", "a", "b"}, {"r1", "b", "c"}, {"r2", "c", "b"}}, {},
                   {isrc("j", 0), res("r1", 1), res("r2", 2)}),
      gen::network({{"e", "a", "b"}, {"y", "a", "b"}, {"z", "a", "c"}, {"r", "c", "b"}}, {},
                   {vsrc("e", 1), gen::dev(DeviceKind::kCCVS, "z", 3, "y"), res("r", 2)}),
      gen::network({{"j1", "a", "b"}, {"j2", "b", "c"}, {"r", "a", "c"}, {"p", "a", "c"}}, {"p"},
                   {isrc("j1", 1), isrc("j2", 2), res("r", 3)}),
      gen::network({{"e", "a", "b"}, {"c", "b", "a"}, {"o", "a", "d"}, {"r", "d", "b"}}, {},
                   {vsrc("e", 2), gen::dev(DeviceKind::kCCCS, "o", 5, "c"), res("r", 7)}),
      gen::network({{"j", "a", "b"}, {"c", "b", "d"}, {"o", "d", "a"}, {"r", "d", "a"}}, {},
                   {isrc("j", 1), gen::dev(DeviceKind::kVCVS, "o", 3, "c"), res("r", 2)}),
  };
  for (std::size_t k = 0; k < bad.size(); ++k) {
    const auto& n = bad[k];
    const auto c = necessity_check(n);
    const std::string tag = ", fixture " + std::to_string(k);
    t.check(!c.pass, "fixture violates necessity" + tag);
    if (c.pass) continue;
    PortAssignment pa;
    for (const auto& p : n.ports) pa[double_primed(p)] = 0;
    const auto s = solve(with_sources(n, violating_sources(n, c)), pa);
    t.check(s.status != SolveStatus::kUnique, "witness sources break uniqueness" + tag);
  }
  return t;
}

Tally ccvs_parallel_fixture() {
  Tally t;
  for (int r : {1, 5, -7}) {
    const Multiport n = gen::network({{"e1", "a", "b"}, {"e2", "a", "b"}}, {},
                                     {gen::dev(DeviceKind::kCCVS, "e2", r, "e1")});
    t.check(!sufficiency_check(n).pass, "sufficiency fails, r = " + std::to_string(r));
    const auto s = solve(n);
    t.check(s.status == SolveStatus::kUnique && is_zero(s.solution),
            "unique zero solution, r = " + std::to_string(r));
  }
  return t;
}

std::size_t lower_bound(const Graph& g, const LabelSet& s) {
  const auto o = oracle::of(kvl_space(g));
  return oracle::rank(oracle::restrict_to(o, vec(s))) - oracle::rank(oracle::contract_to(o, vec(s)));
}

Tally port_minimization() {
  Tally t;
  gen::Rng rng(1009);
  int fixtures = 0;
  for (int attempt = 0; fixtures < 60 && attempt < 1000; ++attempt) {
    const Multiport n = gen::with_extra_ports(
        rng,
        gen::sufficient_multiport(rng, gen::uniform(rng, 2, 5), gen::uniform(rng, 0, 3),
                                  gen::uniform(rng, 0, 2)),
        gen::uniform(rng, 1, 4));
    const LabelSet s = n.internal_edges();
    const std::size_t bound = lower_bound(n.graph, s);
    if (bound >= n.ports.size()) continue;  // no redundant port
    ++fixtures;
    const std::string tag = ", fixture " + std::to_string(fixtures);
    const auto mm = minimize_ports(n);
    const auto& m = mm.minimization;
    t.check(m.kept.size() == bound, "lower bound attained" + tag);
    const VectorSpace full = kvl_space(n.graph), red = kvl_space(m.reduced);
    t.check(restrict_to(red, s) == restrict_to(full, s) && contract_to(red, s) == contract_to(full, s),
            "restriction and contraction preserved" + tag);
    const auto direct = port_behaviour(n), reduced = port_behaviour(mm.network);
    t.check(direct && reduced && lift_behaviour(*reduced, mm.lift) == *direct,
            "lift equals direct behaviour" + tag);
    const auto matrix = port_reduce_matrix(full, s);
    const auto copy = [&](const Label& l) { return contains(s, l) ? l : tilde(l); };
    t.check(matrix.kept.size() == bound &&
                is_port_transformation(matrix.reduced, relabel(red, copy), s),
            "matrix and graph minimizations agree" + tag);
  }
  t.check(fixtures >= 50, "at least 50 fixtures with redundant ports");
  return t;
}

Tally dirac() {
  using gen::res;
  using gen::vsrc;
  Tally t;
  gen::Rng rng(1010);
  for (int it = 0; it < 120; ++it) {
    const Graph g = gen::multigraph(rng, gen::uniform(rng, 1, 6), gen::uniform(rng, 1, 9));
    t.check(dirac_check(topo_space(g)).dirac, "topology space, graph " + std::to_string(it));
  }
  const std::vector<Label> tl{"a'", "b'", "a\"", "b\""};
  const auto xf = VectorSpace::from_rows(tl, {{3, 1, 0, 0}, {0, 0, 1, -3}});
  const auto gy = VectorSpace::from_rows(tl, {{0, 2, 1, 0}, {-2, 0, 0, 1}});
  const auto g = gen::network({{"a", "x", "g"},
                               {"b", "y", "g"},
                               {"p", "x", "g"},
                               {"e", "y", "w"},
                               {"r", "w", "g"},
                               {"q", "x", "y"}},
                              {"p"}, {});
  const std::vector<Device> devs{vsrc("e", 1), res("r", 5), res("q", 7)};
  int sufficient = 0;
  for (const auto& [name, d] : {std::pair{"transformer", xf}, std::pair{"gyrator", gy}}) {
    t.check(dirac_check(d).dirac, std::string(name) + " is Dirac");
    const auto v1 = matched(topo_space(g.graph), d);
    t.check(dirac_check(v1).dirac, std::string(name) + " closed with topology is Dirac");
    const auto pc = purslow2_check(v1, devs);
    if (pc.sufficient()) {
      ++sufficient;
      t.check(pc.rigid, std::string(name) + " sufficiency implies rigid");
    }
  }
  t.check(sufficient > 0, "some Dirac fixture meets the sufficient condition");
  return t;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Tally cli_determinism() {
  Tally t;
  const std::string root = RIGIDMP_SOURCE_DIR;
  std::istringstream cases(slurp(root + "/tests/golden/cases.txt"));
  std::string line;
  while (std::getline(cases, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string golden, a;
    ls >> golden;
    std::vector<std::string> args;
    while (ls >> a) {
      if (a.size() > 4 && a.substr(a.size() - 4) == ".net") a = root + "/fixtures/" + a;
      args.push_back(a);
    }
    std::ostringstream o1, o2, err;
    const int c1 = run_cli(args, o1, err), c2 = run_cli(args, o2, err);
    t.check(c1 == 0 && c2 == 0, golden + " exit code");
    t.check(o1.str() == o2.str(), golden + " identical across runs");
    t.check(o1.str() == slurp(root + "/tests/golden/" + golden), golden + " matches golden file");
  }
  t.check(t.cases >= 30, "golden corpus present");
  return t;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Tally()>>> criteria = {
      {"1 implicit duality (vector)", implicit_duality},
      {"2 rank formulas (vector and graphic matroid)", rank_formulas},
      {"3 Tellegen and minor correspondence", tellegen_minors},
      {"4 matroid union vs brute force", matroid_union},
      {"5 rigidity equivalences", rigidity_equivalences},
      {"6 circuit rigidity end to end", circuit_rigidity},
      {"7 necessity violations", necessity_violations},
      {"8 non-necessity witness", ccvs_parallel_fixture},
      {"9 port minimization", port_minimization},
      {"10 Dirac structures", dirac},
      {"11 CLI determinism", cli_determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    std::string error;
    try {
      t = run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && t.failures == 0 && t.cases > 0;
    failed += !ok;
    std::ostringstream line;
    line << (ok ? "PASS " : "FAIL ") << name << ": " << t.cases << " checks, " << t.failures
         << " failures";
    if (!error.empty()) line << ", exception: " << error;
    if (t.failures > 0) line << ", first: " << t.first_failure;
    line.precision(2);
    line << std::fixed << " (" << secs << " s)";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
