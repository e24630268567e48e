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

#ifndef RIGIDMP_MULTIPORT_HPP_
#define RIGIDMP_MULTIPORT_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rigidmp/colspace.hpp"
#include "rigidmp/graph.hpp"
#include "rigidmp/matroid.hpp"
#include "rigidmp/rigidity.hpp"

namespace rigidmp {

enum class DeviceKind { kResistor, kVSource, kISource, kCCVS, kVCCS, kCCCS, kVCVS };

std::string to_string(DeviceKind k);
bool is_controlled(DeviceKind k);

// For controlled sources `edge` is the output edge and `control` the
// controlling edge:
//   CCVS  v_ctl = 0, v_out = r i_ctl
//   VCCS  i_ctl = 0, i_out = g v_ctl
//   CCCS  v_ctl = 0, i_out = a i_ctl
//   VCVS  i_ctl = 0, v_out = b v_ctl
struct Device {
  DeviceKind kind = DeviceKind::kResistor;
  std::string name;
  Label edge;
  std::optional<Label> control;
  Rational value;
};

struct Multiport {
  Graph graph;
  LabelSet ports;
  std::vector<Device> devices;
  LabelSet internal_edges() const;
};

// Device roles. Y1 are controlling current branches (v = 0), Y2 controlling
// voltage branches (i = 0), Z1 controlled voltage sources, Z2 controlled
// current sources.
struct Roles {
  LabelSet y1, z1, y2, z2, e, j, r;
};

class MultiportError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws MultiportError unless every non-port edge carries exactly one role.
Roles roles_of(const Multiport& n);
void validate(const Multiport& n);

// Voltage space on primed edge labels plus current space on double-primed.
VectorSpace topo_space(const Graph& g);
AffineSpace device_space(const std::vector<Device>& devices);
AffineSpace device_space(const Multiport& n);
GeneralizedMultiport as_generalized(const Multiport& n);

// Sources zeroed.
Multiport homogeneous(const Multiport& n);
// Replaces values of the named source edges.
Multiport with_sources(const Multiport& n, const std::map<Label, Rational>& s);

struct TopologyCheck {
  bool pass = false;
  LabelSet loop;    // offending loop, if any
  LabelSet cutset;  // offending cutset, if any
};
// Y1 u E loop-free and Y2 u J cutset-free.
TopologyCheck necessity_check(const Multiport& n);
// Z1 u Y1 u E loop-free and Z2 u Y2 u J cutset-free.
TopologyCheck sufficiency_check(const Multiport& n);

// Source values on the witness that make the network unsolvable or
// non-unique.
std::map<Label, Rational> violating_sources(const Multiport& n,
                                            const TopologyCheck& failed);

// Device matroid with generic parameters: free on E" Z1" Z2' J', zero on
// E' Y1' Y2" J", and a rank-one pair for each resistor and controlled source.
MatroidPtr generic_device_matroid(const Multiport& n);
MatroidPtr topo_matroid(const Graph& g);

struct MatroidalVerdict {
  bool hypotheses_hold = false;  // reduction hypotheses of the theorem
  TopologyCheck necessity;
  // Z1 u E loop-free and Z2 u J cutset-free.
  bool free_part_hypothesis = false;
  bool rigid = false;
  // Disjoint bases of the topology and device matroids covering S' u S".
  std::optional<std::pair<LabelSet, LabelSet>> bases;
  LabelSet port_base;  // column base of the port behaviour, from the bases
};
MatroidalVerdict matroidal_rigidity(const Multiport& n);

enum class SolveStatus { kUnique, kUnderdetermined, kInconsistent };
std::string to_string(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::kInconsistent;
  LabelSet columns;          // S'P'S"P"
  RowVector solution;        // a solution when consistent
  Matrix kernel;             // homogeneous solutions when underdetermined
  RowVector certificate;     // y with yA = 0 and yb != 0 when inconsistent
  std::vector<std::string> rows;  // description of each equation
  Rational value(const Label& column) const;
};

// Keys are port columns p' (voltage) or p" (current), one per port.
using PortAssignment = std::map<Label, Rational>;
SolveResult solve(const Multiport& n, const PortAssignment& assignment = {});

MaybeAffine port_behaviour(const Multiport& n);

// i_P1" = g11 v_P1' + h12 i_P2" + s1, v_P2' = h21 v_P1' + r22 i_P2" + s2.
struct HybridRep {
  std::vector<Label> p1;  // voltage-driven ports
  std::vector<Label> p2;  // current-driven ports
  LabelSet forest;
  Matrix g11, h12, h21, r22;
  RowVector s1, s2;
};
HybridRep hybrid_rep(const Multiport& n);
AffineSpace hybrid_space(const HybridRep& h);

struct DiracCheck {
  bool dirac = false;
  std::optional<RowVector> violating;  // in the swapped space, not in the complement
  std::string reason;
};
// Columns must pair up as x' and x".
DiracCheck dirac_check(const VectorSpace& v);
VectorSpace swap_primes(const VectorSpace& v);

struct Purslow2Verdict {
  DiracCheck dirac;
  bool necessity = false;    // Y1' u E' and Y2" u J" independent
  bool condition_a = false;
  bool condition_b = false;
  bool sufficient() const { return condition_a || condition_b; }
  bool rigid = false;        // exact rigidity of (V1, device space)
};
Purslow2Verdict purslow2_check(const VectorSpace& v1,
                               const std::vector<Device>& devices);

struct ConnectResult {
  GeneralizedMultiport composite;
  bool rigid = false;
  bool first_rigid = false;
  bool second_rigid = false;
  RigidVerdict port_pair;  // behaviours against the coupling
};
// Coupling is on port columns of the two operands.
ConnectResult connect(const GeneralizedMultiport& a,
                      const GeneralizedMultiport& b,
                      const AffineSpace& coupling);
ConnectResult connect(const Multiport& a, const Multiport& b,
                      const AffineSpace& coupling);

}  // namespace rigidmp

#endif  // RIGIDMP_MULTIPORT_HPP_
