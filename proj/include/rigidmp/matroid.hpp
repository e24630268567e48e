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

#ifndef RIGIDMP_MATROID_HPP_
#define RIGIDMP_MATROID_HPP_

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rigidmp/colspace.hpp"
#include "rigidmp/graph.hpp"

namespace rigidmp {

// Matroid given by an independence oracle on a labeled ground set.
class Matroid {
 public:
  virtual ~Matroid() = default;

  const LabelSet& ground() const { return ground_; }
  // x must be a subset of ground().
  virtual bool is_independent(const LabelSet& x) const = 0;
  // Greedy; subclasses may answer by formula.
  virtual std::size_t rank(const LabelSet& x) const;
  std::size_t full_rank() const { return rank(ground_); }
  // Maximal independent subset of x, greedy in label order.
  LabelSet basis_of(const LabelSet& x) const;
  // Extends independent `start` inside x, trying `order` first.
  LabelSet extend(const LabelSet& start, const LabelSet& x,
                  const std::vector<Label>& order = {}) const;

 protected:
  explicit Matroid(LabelSet ground) : ground_(std::move(ground)) {}
  void check_subset(const LabelSet& x) const;

 private:
  LabelSet ground_;
};

using MatroidPtr = std::shared_ptr<const Matroid>;

MatroidPtr free_matroid(const LabelSet& ground);
MatroidPtr zero_matroid(const LabelSet& ground);
MatroidPtr graphic_matroid(const Graph& g);
MatroidPtr cographic_matroid(const Graph& g);
MatroidPtr linear_matroid(const VectorSpace& v);
// Blocks must be disjoint; ground is their union.
MatroidPtr partition_matroid(
    const std::vector<std::pair<LabelSet, std::size_t>>& blocks);
MatroidPtr dual_matroid(const MatroidPtr& m);
// (M o t1) x t2 with t2 a subset of t1.
MatroidPtr minor_matroid(const MatroidPtr& m, const LabelSet& t1,
                         const LabelSet& t2);
MatroidPtr restrict_matroid(const MatroidPtr& m, const LabelSet& t);
MatroidPtr contract_matroid(const MatroidPtr& m, const LabelSet& t);
MatroidPtr direct_sum_matroid(const MatroidPtr& a, const MatroidPtr& b);
// Union of matroids, each padded with a zero matroid to the union of grounds.
MatroidPtr union_matroid(const std::vector<MatroidPtr>& ms);
// Intersection (wedge) on a common ground set: (M1* v M2*)*.
MatroidPtr intersection_matroid(const MatroidPtr& a, const MatroidPtr& b);
MatroidPtr relabeled_matroid(const MatroidPtr& m,
                             const std::map<Label, Label>& rename);
// (M_SP v M_PQ) x (S u Q).
MatroidPtr linking(const MatroidPtr& sp, const MatroidPtr& pq);

// r(M) + r(M*) = |ground|.
bool dual_rank_identity_check(const Matroid& m);

// Disjoint sets I_k independent in ms[k] (and inside their grounds) whose
// union is a maximal union-independent subset of x. Elements are tried in
// `priority` order first, then label order, so the union contains a
// maximal union-independent subset of the priority set.
std::vector<LabelSet> union_partition(const std::vector<MatroidPtr>& ms,
                                      const LabelSet& x,
                                      const std::vector<Label>& priority = {});

struct MaxDistantBases {
  LabelSet b1;
  LabelSet b2;
  std::size_t union_rank = 0;
};
// Bases b1 of m1, b2 of m2 with |b1 u b2| = r(m1 v m2).
MaxDistantBases union_max_distant(const MatroidPtr& m1, const MatroidPtr& m2);

struct UnionBase {
  LabelSet base;  // base of m1 v m2
  LabelSet part1;
  LabelSet part2;
};
UnionBase union_base_through(const MatroidPtr& m1, const MatroidPtr& m2,
                             const LabelSet& priority);

struct MatroidRigidity {
  bool rigid = false;
  bool full_sum = false;
  bool zero_intersection = false;
  bool primal_additive = false;  // r(M1 v M2) = r(M1) + r(M2)
  bool dual_additive = false;    // same for the duals
  // On success: disjoint bases covering the shared set.
  std::optional<std::pair<LabelSet, LabelSet>> bases;
  std::string failure;
};
MatroidRigidity matroid_pair_rigid(const MatroidPtr& ab, const MatroidPtr& bc);

// (v of members) x Z, Z the labels in exactly one member.
MatroidPtr family_linking(const std::vector<MatroidPtr>& h);
struct MatroidFamilyRigidity {
  bool rigid = false;
  bool primal_additive = false;
  bool dual_additive = false;
};
MatroidFamilyRigidity matroid_family_rigid(const std::vector<MatroidPtr>& h);

}  // namespace rigidmp

#endif  // RIGIDMP_MATROID_HPP_
