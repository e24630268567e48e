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

#ifndef RIGIDMP_PORTXFORM_HPP_
#define RIGIDMP_PORTXFORM_HPP_

#include <map>
#include <vector>

#include "rigidmp/colspace.hpp"
#include "rigidmp/graph.hpp"
#include "rigidmp/multiport.hpp"

namespace rigidmp {

// Representative matrix of V on T u R arranged as
//   B1T  0
//   B2T  B2R
//   0    B3R
// Rows of each block are over t_cols and r_cols respectively.
struct VisibleMinorForm {
  LabelSet t_cols, r_cols;
  Matrix b1t, b2t, b2r, b3r;
};
VisibleMinorForm visible_minor_form(const VectorSpace& v, const LabelSet& t);

struct PortReduction {
  VectorSpace reduced;  // on T u kept
  LabelSet kept;
  LabelSet dropped;
  VisibleMinorForm form;
};
// Keeps a maximal independent set of columns of B2R, greedy in label order.
PortReduction port_reduce_matrix(const VectorSpace& v, const LabelSet& t);

// Tree preferences for graph_port_minimize.
struct TreePreference {
  // Ports taken first when growing t from t1 and t2hat from t2.
  std::vector<Label> first;
  // When set, t2hat is chosen first with `first` ports taken last, and t is
  // grown from t1 through t2hat.
  bool hat_first = false;
};

struct GraphPortMinimization {
  Graph reduced;        // G o (S u t2hat) x (S u P~)
  LabelSet internal;    // S
  LabelSet ports;       // P
  LabelSet t1, t2, t2hat;
  LabelSet kept;        // P~ = t2hat - t2
  LabelSet removed;     // P - t2hat
  std::map<Label, Label> relabel;  // reduced port -> original edge
};
GraphPortMinimization graph_port_minimize(const Graph& g, const LabelSet& s,
                                          const TreePreference& pref = {});

// (K o B_cols n V o B) + V x B.
AffineSpace internal_model(const VectorSpace& v, const AffineSpace& k);

// Equal restriction and contraction to S. When they agree the round trip
// V_SP <-> (V_SP <-> V_SQ) = V_SQ is asserted; P and Q must be disjoint.
bool is_port_transformation(const VectorSpace& sp, const VectorSpace& sq,
                            const LabelSet& s);

// Blocks relating the behaviour on P~ to the behaviour on P, with
// t2, P~ and P - t2hat in label order.
//   0 | Q | Q K_kr   ||  B M_kt | B | 0
//   I | K_tk | K_tr  ||  0      | 0 | 0
//   0 | 0 | 0        ||  M_rt   | M_rk | I
struct LiftData {
  std::vector<Label> t2, kept, rest;
  Matrix k_tk, k_tr, k_kr;
  Matrix m_kt, m_rt, m_rk;
};
LiftData lift_data(const Graph& g, const GraphPortMinimization& m);

// Behaviour on P~' P~" lifted to P' P".
AffineSpace lift_behaviour(const AffineSpace& reduced, const LiftData& d);

struct MinimizedMultiport {
  GraphPortMinimization minimization;
  Multiport network;
  LiftData lift;
};
MinimizedMultiport minimize_ports(const Multiport& n,
                                  const TreePreference& pref = {});

struct PortIndependence {
  bool loop_free = false;
  bool cutset_free = false;
  bool prime_restriction = false;    // P1' independent in V o P'
  bool prime_contraction = false;    // P1' independent in V x P'
  bool dprime_restriction = false;   // P1" independent in V o P"
  bool dprime_contraction = false;   // P1" independent in V x P"
};
// Columns refer to the homogeneous port behaviour.
PortIndependence test_port_independence(const Multiport& n,
                                        const LabelSet& p1);

}  // namespace rigidmp

#endif  // RIGIDMP_PORTXFORM_HPP_
