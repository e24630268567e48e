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

#ifndef RIGIDMP_RIGIDITY_HPP_
#define RIGIDMP_RIGIDITY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "rigidmp/colspace.hpp"
#include "rigidmp/family.hpp"

namespace rigidmp {

struct RigidVerdict {
  bool rigid = false;
  bool full_sum_holds = false;
  bool zero_intersection_holds = false;
  LabelSet shared;
  // Vector on `shared` outside V1 o B + V2 o B.
  std::optional<RowVector> full_sum_witness;
  // Nonzero vector on `shared` in V1 x B and V2 x B.
  std::optional<RowVector> zero_intersection_witness;
};

bool full_sum(const VectorSpace& a, const VectorSpace& b);
bool zero_intersection(const VectorSpace& a, const VectorSpace& b);

// Rigidity of the pair; affine inputs are reduced to their translates.
RigidVerdict pair_rigid(const VectorSpace& a, const VectorSpace& b);
RigidVerdict pair_rigid(const AffineSpace& a, const AffineSpace& b);

struct DerivedSplit {
  RigidVerdict pair1;     // {V_WTV, V_V}
  RigidVerdict pair2;     // {V_WTV <-> V_V, V_T}
  RigidVerdict combined;  // {V_WTV, V_T + V_V}
};
DerivedSplit derived_rigidity_split(const VectorSpace& wtv, const VectorSpace& t,
                                    const VectorSpace& v);

struct FamilyVerdict {
  bool rigid = false;
  bool primal_additive = false;
  bool dual_additive = false;
};
FamilyVerdict family_rigid(const std::vector<VectorSpace>& h);

struct RecursiveFamilyVerdict {
  bool rigid = false;
  // Member graph connected with at least one edge.
  bool hypothesis_holds = false;
  std::vector<FamilyVerdict> blocks;
  FamilyVerdict matched_top;  // on the matched compositions of the blocks
  FamilyVerdict skewed_top;   // on the skewed compositions of the blocks
  // Used when the hypothesis fails: direct tests per connected component.
  std::vector<std::vector<std::size_t>> components;
  std::vector<FamilyVerdict> component_verdicts;
};
// `partition` lists member indices per block.
RecursiveFamilyVerdict family_rigid_recursive(
    const std::vector<VectorSpace>& h,
    const std::vector<std::vector<std::size_t>>& partition);

// Negates, in each member, the labels it shares with a later member.
std::vector<VectorSpace> skewed_pair(const std::vector<VectorSpace>& h);

struct MatroidVectorReport {
  bool vector_rigid = false;
  bool matroid_rigid = false;
  bool primal_hypothesis = false;  // M(V1 + V2) = M(V1) v M(V2)
  bool dual_hypothesis = false;    // same for the complements
  bool exhaustive = false;         // all subsets probed
  bool hypotheses_hold() const { return primal_hypothesis && dual_hypothesis; }
  bool agree() const { return vector_rigid == matroid_rigid; }
};
MatroidVectorReport matroid_vector_cross_check(const VectorSpace& ab,
                                               const VectorSpace& bc);

// Topology space on ports and internal columns, device set on the internal
// columns. Ports are the topology columns the device does not mention.
struct GeneralizedMultiport {
  VectorSpace topology;
  AffineSpace device;
  LabelSet ports() const {
    return set_difference(topology.columns(), device.columns());
  }
};

bool is_rigid(const GeneralizedMultiport& n);
GeneralizedMultiport dual_pair_generator(const VectorSpace& topology,
                                         const AffineSpace& device);
GeneralizedMultiport homogeneous(const GeneralizedMultiport& n);
MaybeAffine behaviour(const GeneralizedMultiport& n);

}  // namespace rigidmp

#endif  // RIGIDMP_RIGIDITY_HPP_
