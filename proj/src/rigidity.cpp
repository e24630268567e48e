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

#include "rigidmp/rigidity.hpp"

#include <random>
#include <stdexcept>

#include "rigidmp/matroid.hpp"

namespace rigidmp {

bool full_sum(const VectorSpace& a, const VectorSpace& b) {
  const LabelSet shared = set_intersection(a.columns(), b.columns());
  return sum(restrict_to(a, shared), restrict_to(b, shared)).rank() == shared.size();
}

bool zero_intersection(const VectorSpace& a, const VectorSpace& b) {
  const LabelSet shared = set_intersection(a.columns(), b.columns());
  return intersect(contract_to(a, shared), contract_to(b, shared)).rank() == 0;
}

RigidVerdict pair_rigid(const VectorSpace& a, const VectorSpace& b) {
  RigidVerdict v;
  v.shared = set_intersection(a.columns(), b.columns());
  const VectorSpace s = sum(restrict_to(a, v.shared), restrict_to(b, v.shared));
  const VectorSpace x = intersect(contract_to(a, v.shared), contract_to(b, v.shared));
  v.full_sum_holds = s.rank() == v.shared.size();
  v.zero_intersection_holds = x.rank() == 0;
  if (!v.full_sum_holds) v.full_sum_witness = orthocomplement(s).basis().front();
  if (!v.zero_intersection_holds) v.zero_intersection_witness = x.basis().front();
  v.rigid = v.full_sum_holds && v.zero_intersection_holds;

  // Rank characterizations: zero intersection <=> primal additivity,
  // full sum <=> dual additivity.
  const bool primal = sum(a, b).rank() == a.rank() + b.rank();
  const VectorSpace ap = orthocomplement(a), bp = orthocomplement(b);
  const bool dual = sum(ap, bp).rank() == ap.rank() + bp.rank();
  if (primal != v.zero_intersection_holds || dual != v.full_sum_holds) {
    throw std::logic_error("rigidity characterizations disagree");
  }
  return v;
}

RigidVerdict pair_rigid(const AffineSpace& a, const AffineSpace& b) {
  return pair_rigid(a.translate(), b.translate());
}

DerivedSplit derived_rigidity_split(const VectorSpace& wtv, const VectorSpace& t,
                                    const VectorSpace& v) {
  DerivedSplit d;
  d.pair1 = pair_rigid(wtv, v);
  d.pair2 = pair_rigid(matched(wtv, v), t);
  d.combined = pair_rigid(wtv, direct_sum(t, v));
  if (d.combined.rigid != (d.pair1.rigid && d.pair2.rigid)) {
    throw std::logic_error("derived rigidity split disagrees with direct test");
  }
  return d;
}

FamilyVerdict family_rigid(const std::vector<VectorSpace>& h) {
  validate_associative(grounds_of(h));
  FamilyVerdict f;
  std::size_t r = 0, rp = 0;
  VectorSpace s = VectorSpace::zero({}), sp = VectorSpace::zero({});
  for (const auto& v : h) {
    const VectorSpace p = orthocomplement(v);
    r += v.rank();
    rp += p.rank();
    s = sum(s, v);
    sp = sum(sp, p);
  }
  f.primal_additive = s.rank() == r;
  f.dual_additive = sp.rank() == rp;
  f.rigid = f.primal_additive && f.dual_additive;
  return f;
}

std::vector<VectorSpace> skewed_pair(const std::vector<VectorSpace>& h) {
  std::vector<VectorSpace> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    LabelSet later;
    for (std::size_t j = i + 1; j < h.size(); ++j) {
      later = set_union(later, set_intersection(h[i].columns(), h[j].columns()));
    }
    out.push_back(negate_on(h[i], later));
  }
  return out;
}

RecursiveFamilyVerdict family_rigid_recursive(
    const std::vector<VectorSpace>& h,
    const std::vector<std::vector<std::size_t>>& partition) {
  const auto grounds = grounds_of(h);
  validate_associative(grounds);
  std::vector<int> seen(h.size(), 0);
  for (const auto& block : partition) {
    for (auto i : block) {
      if (i >= h.size() || seen[i]++) {
        throw std::invalid_argument("blocks do not partition the family");
      }
    }
  }
  for (int s : seen) {
    if (s != 1) throw std::invalid_argument("blocks do not partition the family");
  }

  RecursiveFamilyVerdict res;
  res.components = family_components(grounds);
  res.hypothesis_holds =
      res.components.size() == 1 && !family_graph_edges(grounds).empty();
  if (!res.hypothesis_holds) {
    res.rigid = true;
    for (const auto& comp : res.components) {
      std::vector<VectorSpace> sub;
      for (auto i : comp) sub.push_back(h[i]);
      res.component_verdicts.push_back(family_rigid(sub));
      res.rigid = res.rigid && res.component_verdicts.back().rigid;
    }
    return res;
  }
  std::vector<VectorSpace> tops, skewed_tops;
  bool blocks_rigid = true;
  for (const auto& block : partition) {
    std::vector<VectorSpace> sub;
    for (auto i : block) sub.push_back(h[i]);
    res.blocks.push_back(family_rigid(sub));
    blocks_rigid = blocks_rigid && res.blocks.back().rigid;
    tops.push_back(family_matched(sub));
    skewed_tops.push_back(family_skewed(sub));
  }
  res.matched_top = family_rigid(tops);
  res.skewed_top = family_rigid(skewed_tops);
  res.rigid = blocks_rigid && res.matched_top.rigid;
  if (res.rigid != (blocks_rigid && res.skewed_top.rigid)) {
    throw std::logic_error("matched and skewed recursive verdicts disagree");
  }
  return res;
}

namespace {

// Rank of every probed subset agrees between a linear matroid and a union.
bool same_ranks(const MatroidPtr& a, const MatroidPtr& b, bool& exhaustive) {
  const LabelSet& g = a->ground();
  if (g.size() <= 10) {
    exhaustive = true;
    for (unsigned m = 0; m < (1u << g.size()); ++m) {
      LabelSet x;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (m & (1u << i)) x.push_back(g[i]);
      }
      if (a->rank(x) != b->rank(x)) return false;
    }
    return true;
  }
  exhaustive = false;
  std::mt19937_64 rng(g.size());
  for (int probe = 0; probe < 256; ++probe) {
    LabelSet x;
    for (const auto& l : g) {
      if (rng() & 1u) x.push_back(l);
    }
    if (a->rank(x) != b->rank(x)) return false;
  }
  return a->full_rank() == b->full_rank();
}

}  // namespace

MatroidVectorReport matroid_vector_cross_check(const VectorSpace& ab,
                                               const VectorSpace& bc) {
  MatroidVectorReport rep;
  rep.vector_rigid = pair_rigid(ab, bc).rigid;
  rep.matroid_rigid =
      matroid_pair_rigid(linear_matroid(ab), linear_matroid(bc)).rigid;
  bool ex1 = false, ex2 = false;
  rep.primal_hypothesis =
      same_ranks(linear_matroid(sum(ab, bc)),
                 union_matroid({linear_matroid(ab), linear_matroid(bc)}), ex1);
  const VectorSpace abp = orthocomplement(ab), bcp = orthocomplement(bc);
  rep.dual_hypothesis =
      same_ranks(linear_matroid(sum(abp, bcp)),
                 union_matroid({linear_matroid(abp), linear_matroid(bcp)}), ex2);
  rep.exhaustive = ex1 && ex2;
  if (rep.vector_rigid && !rep.matroid_rigid) {
    throw std::logic_error("rigid vector pair with non-rigid matroid pair");
  }
  if (rep.hypotheses_hold() && rep.exhaustive && !rep.agree()) {
    throw std::logic_error("matroid and vector rigidity disagree under hypotheses");
  }
  return rep;
}

bool is_rigid(const GeneralizedMultiport& n) {
  return pair_rigid(n.topology, n.device.translate()).rigid;
}

GeneralizedMultiport dual_pair_generator(const VectorSpace& topology,
                                         const AffineSpace& device) {
  return {orthocomplement(topology),
          AffineSpace::linear(orthocomplement(device.translate()))};
}

GeneralizedMultiport homogeneous(const GeneralizedMultiport& n) {
  return {n.topology, AffineSpace::linear(n.device.translate())};
}

MaybeAffine behaviour(const GeneralizedMultiport& n) {
  return affine_matched(AffineSpace::linear(n.topology), n.device);
}

}  // namespace rigidmp
