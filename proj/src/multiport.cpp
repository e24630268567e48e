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

#include "rigidmp/multiport.hpp"

#include <stdexcept>

namespace rigidmp {

std::string to_string(DeviceKind k) {
  switch (k) {
    case DeviceKind::kResistor: return "resistor";
    case DeviceKind::kVSource: return "vsource";
    case DeviceKind::kISource: return "isource";
    case DeviceKind::kCCVS: return "ccvs";
    case DeviceKind::kVCCS: return "vccs";
    case DeviceKind::kCCCS: return "cccs";
    case DeviceKind::kVCVS: return "vcvs";
  }
  return "?";
}

bool is_controlled(DeviceKind k) {
  return k == DeviceKind::kCCVS || k == DeviceKind::kVCCS ||
         k == DeviceKind::kCCCS || k == DeviceKind::kVCVS;
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kUnique: return "unique";
    case SolveStatus::kUnderdetermined: return "underdetermined";
    case SolveStatus::kInconsistent: return "inconsistent";
  }
  return "?";
}

LabelSet Multiport::internal_edges() const {
  return set_difference(graph.edge_labels(), ports);
}

namespace {

Roles roles_of_devices(const std::vector<Device>& devices) {
  Roles r;
  LabelSet used;
  auto take = [&](LabelSet& role, const Label& l) {
    if (contains(used, l)) {
      throw MultiportError("edge " + to_string(l) + " carries more than one device role");
    }
    used = set_union(used, {l});
    role = set_union(role, {l});
  };
  for (const auto& d : devices) {
    if (is_controlled(d.kind) && !d.control) {
      throw MultiportError("controlled source " + d.name + " has no control edge");
    }
    if (!is_controlled(d.kind) && d.control) {
      throw MultiportError("device " + d.name + " cannot have a control edge");
    }
    if (d.control && *d.control == d.edge) {
      throw MultiportError("controlled source " + d.name +
                           " uses the same edge for control and output");
    }
    switch (d.kind) {
      case DeviceKind::kResistor: take(r.r, d.edge); break;
      case DeviceKind::kVSource: take(r.e, d.edge); break;
      case DeviceKind::kISource: take(r.j, d.edge); break;
      case DeviceKind::kCCVS: take(r.y1, *d.control); take(r.z1, d.edge); break;
      case DeviceKind::kVCCS: take(r.y2, *d.control); take(r.z2, d.edge); break;
      case DeviceKind::kCCCS: take(r.y1, *d.control); take(r.z2, d.edge); break;
      case DeviceKind::kVCVS: take(r.y2, *d.control); take(r.z1, d.edge); break;
    }
  }
  return r;
}

LabelSet role_union(const Roles& r) {
  LabelSet s;
  for (const auto* x : {&r.y1, &r.z1, &r.y2, &r.z2, &r.e, &r.j, &r.r}) {
    s = set_union(s, *x);
  }
  return s;
}

struct Equations {
  Matrix c;
  RowVector d;
  std::vector<std::string> text;
};

// Device equations over `cols` (sorted column labels).
Equations device_equations(const std::vector<Device>& devices, const LabelSet& cols) {
  Equations eq;
  auto idx = [&](const Label& l) {
    auto it = std::lower_bound(cols.begin(), cols.end(), l);
    if (it == cols.end() || *it != l) {
      throw MultiportError("device refers to unknown column " + to_string(l));
    }
    return static_cast<std::size_t>(it - cols.begin());
  };
  auto row = [&](std::vector<std::pair<Label, Rational>> terms, const Rational& rhs,
                 std::string text) {
    RowVector r(cols.size(), 0);
    for (auto& [l, q] : terms) r[idx(l)] += q;
    eq.c.push_back(std::move(r));
    eq.d.push_back(rhs);
    eq.text.push_back(std::move(text));
  };
  for (const auto& dv : devices) {
    const Label v = primed(dv.edge), i = double_primed(dv.edge);
    const std::string n = dv.name;
    switch (dv.kind) {
      case DeviceKind::kResistor:
        row({{v, 1}, {i, -dv.value}}, 0, n + ": v = R i");
        break;
      case DeviceKind::kVSource:
        row({{v, 1}}, dv.value, n + ": v = s");
        break;
      case DeviceKind::kISource:
        row({{i, 1}}, dv.value, n + ": i = s");
        break;
      case DeviceKind::kCCVS:
        row({{primed(*dv.control), 1}}, 0, n + ": v_ctl = 0");
        row({{v, 1}, {double_primed(*dv.control), -dv.value}}, 0, n + ": v = r i_ctl");
        break;
      case DeviceKind::kVCCS:
        row({{double_primed(*dv.control), 1}}, 0, n + ": i_ctl = 0");
        row({{i, 1}, {primed(*dv.control), -dv.value}}, 0, n + ": i = g v_ctl");
        break;
      case DeviceKind::kCCCS:
        row({{primed(*dv.control), 1}}, 0, n + ": v_ctl = 0");
        row({{i, 1}, {double_primed(*dv.control), -dv.value}}, 0, n + ": i = a i_ctl");
        break;
      case DeviceKind::kVCVS:
        row({{double_primed(*dv.control), 1}}, 0, n + ": i_ctl = 0");
        row({{v, 1}, {primed(*dv.control), -dv.value}}, 0, n + ": v = b v_ctl");
        break;
    }
  }
  return eq;
}

LabelSet device_edges(const std::vector<Device>& devices) {
  return role_union(roles_of_devices(devices));
}

LabelSet both_copies(const LabelSet& s) {
  return set_union(primed(s), double_primed(s));
}

std::map<Label, Label> decorate_map(const LabelSet& s, bool prime) {
  std::map<Label, Label> m;
  for (const auto& l : s) m[l] = prime ? primed(l) : double_primed(l);
  return m;
}

}  // namespace

Roles roles_of(const Multiport& n) {
  for (const auto& p : n.ports) {
    if (!n.graph.has_edge(p)) throw MultiportError("unknown port edge " + to_string(p));
  }
  const Roles r = roles_of_devices(n.devices);
  const LabelSet used = role_union(r);
  const LabelSet internal = n.internal_edges();
  for (const auto& l : used) {
    if (contains(n.ports, l)) {
      throw MultiportError("port edge " + to_string(l) + " carries a device");
    }
    if (!n.graph.has_edge(l)) {
      throw MultiportError("device on unknown edge " + to_string(l));
    }
  }
  const LabelSet missing = set_difference(internal, used);
  if (!missing.empty()) {
    throw MultiportError("edge " + to_string(missing.front()) + " has no device");
  }
  return r;
}

void validate(const Multiport& n) { roles_of(n); }

VectorSpace topo_space(const Graph& g) {
  return direct_sum(relabel(kvl_space(g), [](const Label& l) { return primed(l); }),
                    relabel(kcl_space(g), [](const Label& l) { return double_primed(l); }));
}

AffineSpace device_space(const std::vector<Device>& devices) {
  const LabelSet cols = both_copies(device_edges(devices));
  const Equations eq = device_equations(devices, cols);
  auto a = solution_set(std::vector<Label>(cols.begin(), cols.end()), eq.c, eq.d);
  if (!a) throw std::logic_error("device equations are inconsistent");
  return *a;
}

AffineSpace device_space(const Multiport& n) {
  validate(n);
  return device_space(n.devices);
}

GeneralizedMultiport as_generalized(const Multiport& n) {
  return {topo_space(n.graph), device_space(n)};
}

Multiport homogeneous(const Multiport& n) {
  Multiport h = n;
  for (auto& d : h.devices) {
    if (d.kind == DeviceKind::kVSource || d.kind == DeviceKind::kISource) d.value = 0;
  }
  return h;
}

Multiport with_sources(const Multiport& n, const std::map<Label, Rational>& s) {
  Multiport h = n;
  for (auto& d : h.devices) {
    auto it = s.find(d.edge);
    if (it == s.end()) continue;
    if (d.kind != DeviceKind::kVSource && d.kind != DeviceKind::kISource) {
      throw MultiportError("edge " + to_string(d.edge) + " is not an independent source");
    }
    d.value = it->second;
  }
  return h;
}

namespace {

TopologyCheck topology_check(const Graph& g, const LabelSet& voltage_like,
                             const LabelSet& current_like) {
  TopologyCheck c;
  c.loop = find_loop(g, voltage_like);
  c.cutset = find_cutset(g, current_like);
  c.pass = c.loop.empty() && c.cutset.empty();
  return c;
}

}  // namespace

TopologyCheck necessity_check(const Multiport& n) {
  const Roles r = roles_of(n);
  return topology_check(n.graph, set_union(r.y1, r.e), set_union(r.y2, r.j));
}

TopologyCheck sufficiency_check(const Multiport& n) {
  const Roles r = roles_of(n);
  return topology_check(n.graph, set_union(set_union(r.z1, r.y1), r.e),
                        set_union(set_union(r.z2, r.y2), r.j));
}

std::map<Label, Rational> violating_sources(const Multiport& n,
                                            const TopologyCheck& failed) {
  const Roles r = roles_of(n);
  std::map<Label, Rational> s;
  for (const auto& l : r.e) s[l] = 0;
  for (const auto& l : r.j) s[l] = 0;
  // One nonzero source on the loop (cutset) violates KVL (KCL) around it, as
  // the other members are pinned to zero.
  const LabelSet on_loop = set_intersection(failed.loop, r.e);
  const LabelSet on_cut = set_intersection(failed.cutset, r.j);
  if (!on_loop.empty()) {
    s[on_loop.front()] = 1;
  } else if (!on_cut.empty()) {
    s[on_cut.front()] = 1;
  }
  return s;
}

MatroidPtr topo_matroid(const Graph& g) {
  const LabelSet edges = g.edge_labels();
  return direct_sum_matroid(
      relabeled_matroid(graphic_matroid(g), decorate_map(edges, true)),
      relabeled_matroid(cographic_matroid(g), decorate_map(edges, false)));
}

MatroidPtr generic_device_matroid(const Multiport& n) {
  const Roles r = roles_of(n);
  const LabelSet free_part = set_union(
      set_union(double_primed(r.e), double_primed(r.z1)),
      set_union(primed(r.z2), primed(r.j)));
  const LabelSet zero_part = set_union(
      set_union(primed(r.e), primed(r.y1)),
      set_union(double_primed(r.y2), double_primed(r.j)));
  std::vector<std::pair<LabelSet, std::size_t>> pairs;
  for (const auto& d : n.devices) {
    const Label v = primed(d.edge), i = double_primed(d.edge);
    switch (d.kind) {
      case DeviceKind::kResistor: pairs.push_back({make_set({v, i}), 1}); break;
      case DeviceKind::kCCVS:
        pairs.push_back({make_set({double_primed(*d.control), v}), 1});
        break;
      case DeviceKind::kVCCS:
        pairs.push_back({make_set({primed(*d.control), i}), 1});
        break;
      case DeviceKind::kCCCS:
        pairs.push_back({make_set({double_primed(*d.control), i}), 1});
        break;
      case DeviceKind::kVCVS:
        pairs.push_back({make_set({primed(*d.control), v}), 1});
        break;
      default: break;
    }
  }
  return direct_sum_matroid(
      direct_sum_matroid(free_matroid(free_part), zero_matroid(zero_part)),
      partition_matroid(pairs));
}

MatroidalVerdict matroidal_rigidity(const Multiport& n) {
  const Roles r = roles_of(n);
  MatroidalVerdict v;
  v.necessity = necessity_check(n);
  const VectorSpace top = topo_space(n.graph);
  const LabelSet z = set_union(set_union(double_primed(r.e), double_primed(r.z1)),
                               set_union(primed(r.z2), primed(r.j)));
  const LabelSet y = set_union(set_union(primed(r.e), primed(r.y1)),
                               set_union(double_primed(r.y2), double_primed(r.j)));
  const bool y_full = restrict_to(top, y).rank() == y.size();
  v.free_part_hypothesis = contract_to(top, z).rank() == 0;
  if (y_full != v.necessity.pass) {
    throw std::logic_error("necessity check disagrees with restriction test");
  }
  v.hypotheses_hold = y_full && v.free_part_hypothesis;

  const auto m = matroid_pair_rigid(topo_matroid(n.graph), generic_device_matroid(n));
  v.rigid = m.rigid;
  if (!v.necessity.pass && v.rigid) {
    throw std::logic_error("matroid pair rigid despite a necessity violation");
  }
  if (m.bases) {
    v.bases = m.bases;
    v.port_base = set_intersection(m.bases->first, both_copies(n.ports));
  }
  return v;
}

Rational SolveResult::value(const Label& column) const {
  auto it = std::lower_bound(columns.begin(), columns.end(), column);
  if (it == columns.end() || *it != column || solution.empty()) {
    throw std::out_of_range("no value for column " + to_string(column));
  }
  return solution[it - columns.begin()];
}

SolveResult solve(const Multiport& n, const PortAssignment& assignment) {
  validate(n);
  SolveResult res;
  const LabelSet edges = n.graph.edge_labels();
  res.columns = both_copies(edges);
  const std::size_t nc = res.columns.size();
  auto idx = [&](const Label& l) {
    return static_cast<std::size_t>(
        std::lower_bound(res.columns.begin(), res.columns.end(), l) -
        res.columns.begin());
  };

  Matrix a;
  RowVector b;
  const LabelSet forest = spanning_forest(n.graph);
  for (const auto& [c, circuit] : fundamental_circuits(n.graph, forest)) {
    RowVector r(nc, 0);
    for (const auto& [l, s] : circuit) r[idx(primed(l))] += s;
    a.push_back(r);
    b.push_back(0);
    res.rows.push_back("KVL loop of " + to_string(c));
  }
  for (const auto& [t, cut] : fundamental_cutsets(n.graph, forest)) {
    RowVector r(nc, 0);
    for (const auto& [l, s] : cut) r[idx(double_primed(l))] += s;
    a.push_back(r);
    b.push_back(0);
    res.rows.push_back("KCL cutset of " + to_string(t));
  }
  const Equations dev = device_equations(n.devices, res.columns);
  for (std::size_t k = 0; k < dev.c.size(); ++k) {
    a.push_back(dev.c[k]);
    b.push_back(dev.d[k]);
    res.rows.push_back(dev.text[k]);
  }
  LabelSet assigned_ports;
  for (const auto& [col, val] : assignment) {
    const Label e = undecorated(col);
    if (col.decoration == Decoration::kPlain || !contains(n.ports, e)) {
      throw MultiportError("assignment column " + to_string(col) + " is not a port column");
    }
    if (contains(assigned_ports, e)) {
      throw MultiportError("port " + to_string(e) + " is assigned twice");
    }
    assigned_ports = set_union(assigned_ports, {e});
    RowVector r(nc, 0);
    r[idx(col)] = 1;
    a.push_back(r);
    b.push_back(val);
    res.rows.push_back("port " + to_string(col));
  }
  if (assigned_ports != n.ports) {
    throw MultiportError("every port needs exactly one assigned column");
  }

  Matrix aug = a;
  for (std::size_t k = 0; k < aug.size(); ++k) aug[k].push_back(b[k]);
  const auto piv = rref(aug, nc + 1);
  if (!piv.empty() && piv.back() == nc) {
    res.status = SolveStatus::kInconsistent;
    for (const auto& y : null_space(transpose(a, nc), a.size())) {
      if (dot(y, b) != 0) {
        res.certificate = y;
        break;
      }
    }
    return res;
  }
  res.solution.assign(nc, 0);
  for (std::size_t k = 0; k < piv.size(); ++k) res.solution[piv[k]] = aug[k][nc];
  res.kernel = null_space(a, nc);
  res.status = res.kernel.empty() ? SolveStatus::kUnique : SolveStatus::kUnderdetermined;
  return res;
}

MaybeAffine port_behaviour(const Multiport& n) {
  return affine_matched(AffineSpace::linear(topo_space(n.graph)), device_space(n));
}

HybridRep hybrid_rep(const Multiport& n) {
  const Roles r = roles_of(n);
  if (!sufficiency_check(n).pass) {
    throw MultiportError("hybrid representation needs the sufficiency conditions");
  }
  HybridRep h;
  std::vector<Label> prefer;
  for (const auto& l : n.internal_edges()) prefer.push_back(l);
  for (const auto& l : n.ports) prefer.push_back(l);
  h.forest = constrained_forest(n.graph, set_union(set_union(r.z1, r.y1), r.e),
                                set_union(set_union(r.z2, r.y2), r.j), prefer);
  for (const auto& p : n.ports) (contains(h.forest, p) ? h.p1 : h.p2).push_back(p);

  const std::size_t n1 = h.p1.size(), n2 = h.p2.size();
  auto excite = [&](const Multiport& net, int which) {
    PortAssignment as;
    for (std::size_t k = 0; k < n1; ++k) {
      as[primed(h.p1[k])] = static_cast<int>(k) == which ? 1 : 0;
    }
    for (std::size_t k = 0; k < n2; ++k) {
      as[double_primed(h.p2[k])] = static_cast<int>(n1 + k) == which ? 1 : 0;
    }
    const SolveResult s = solve(net, as);
    if (s.status != SolveStatus::kUnique) {
      throw MultiportError(
          "network is not uniquely solvable with these parameter values "
          "(non-generic cancellation)");
    }
    RowVector out;
    for (const auto& p : h.p1) out.push_back(s.value(double_primed(p)));
    for (const auto& p : h.p2) out.push_back(s.value(primed(p)));
    return out;
  };
  const Multiport hom = homogeneous(n);
  h.g11.assign(n1, RowVector(n1));
  h.h12.assign(n1, RowVector(n2));
  h.h21.assign(n2, RowVector(n1));
  h.r22.assign(n2, RowVector(n2));
  for (std::size_t m = 0; m < n1 + n2; ++m) {
    const RowVector col = excite(hom, static_cast<int>(m));
    for (std::size_t k = 0; k < n1; ++k) {
      (m < n1 ? h.g11[k][m] : h.h12[k][m - n1]) = col[k];
    }
    for (std::size_t k = 0; k < n2; ++k) {
      (m < n1 ? h.h21[k][m] : h.r22[k][m - n1]) = col[n1 + k];
    }
  }
  const RowVector off = excite(n, -1);
  h.s1.assign(off.begin(), off.begin() + n1);
  h.s2.assign(off.begin() + n1, off.end());

  const auto beh = port_behaviour(n);
  if (!beh || !(hybrid_space(h) == *beh)) {
    throw std::logic_error("hybrid representation does not reproduce the port behaviour");
  }
  return h;
}

AffineSpace hybrid_space(const HybridRep& h) {
  const std::size_t n1 = h.p1.size(), n2 = h.p2.size();
  std::vector<Label> labels;
  for (const auto& p : h.p1) labels.push_back(primed(p));
  for (const auto& p : h.p2) labels.push_back(double_primed(p));
  for (const auto& p : h.p1) labels.push_back(double_primed(p));
  for (const auto& p : h.p2) labels.push_back(primed(p));
  // Columns: independent (v_P1', i_P2") then dependent (i_P1", v_P2').
  const std::size_t nt = 2 * (n1 + n2);
  Matrix c;
  RowVector d;
  for (std::size_t k = 0; k < n1 + n2; ++k) {
    RowVector r(nt, 0);
    r[n1 + n2 + k] = 1;
    for (std::size_t j = 0; j < n1 + n2; ++j) {
      const Rational& coef = k < n1 ? (j < n1 ? h.g11[k][j] : h.h12[k][j - n1])
                                    : (j < n1 ? h.h21[k - n1][j] : h.r22[k - n1][j - n1]);
      r[j] = -coef;
    }
    c.push_back(r);
    d.push_back(k < n1 ? h.s1[k] : h.s2[k - n1]);
  }
  auto a = solution_set(labels, c, d);
  return *a;
}

VectorSpace swap_primes(const VectorSpace& v) {
  return relabel(v, [](const Label& l) {
    if (l.decoration == Decoration::kPrime) return double_primed(l);
    if (l.decoration == Decoration::kDoublePrime) return primed(l);
    throw MultiportError("column " + to_string(l) + " is neither primed nor double-primed");
  });
}

DiracCheck dirac_check(const VectorSpace& v) {
  DiracCheck c;
  const LabelSet& cols = v.columns();
  for (const auto& l : cols) {
    const Label partner = l.decoration == Decoration::kPrime ? double_primed(l) : primed(l);
    if (l.decoration == Decoration::kPlain || !contains(cols, partner)) {
      c.reason = "column " + to_string(l) + " has no primed/double-primed partner";
      return c;
    }
  }
  const VectorSpace s = swap_primes(v);
  const VectorSpace p = orthocomplement(v);
  if (s == p) {
    c.dirac = true;
    return c;
  }
  for (const auto& row : s.basis()) {
    if (!p.contains_vector(row)) {
      c.violating = row;
      c.reason = "swapped vector not orthogonal to the space";
      return c;
    }
  }
  for (const auto& row : p.basis()) {
    if (!s.contains_vector(row)) {
      c.violating = row;
      c.reason = "complement vector missing from the swapped space";
      return c;
    }
  }
  return c;
}

Purslow2Verdict purslow2_check(const VectorSpace& v1,
                               const std::vector<Device>& devices) {
  Purslow2Verdict res;
  res.dirac = dirac_check(v1);
  if (!res.dirac.dirac) return res;
  const Roles r = roles_of_devices(devices);
  const AffineSpace dev = device_space(devices);
  if (!is_subset(dev.columns(), v1.columns())) {
    throw MultiportError("device columns missing from the topology space");
  }
  LabelSet primes, doubles;
  for (const auto& l : v1.columns()) {
    (l.decoration == Decoration::kPrime ? primes : doubles).push_back(l);
  }
  const LabelSet vset = primed(set_union(set_union(r.z1, r.y1), r.e));
  const LabelSet iset = double_primed(set_union(set_union(r.z2, r.y2), r.j));
  res.necessity = is_independent(v1, primed(set_union(r.y1, r.e))) &&
                  is_independent(v1, double_primed(set_union(r.y2, r.j)));
  res.condition_a = is_independent(v1, vset) &&
                    is_independent(contract_to(v1, doubles), iset);
  res.condition_b = is_independent(v1, iset) &&
                    is_independent(contract_to(v1, primes), vset);
  res.rigid = pair_rigid(v1, dev.translate()).rigid;
  return res;
}

ConnectResult connect(const GeneralizedMultiport& a, const GeneralizedMultiport& b,
                      const AffineSpace& coupling) {
  const LabelSet ca = set_union(a.topology.columns(), a.device.columns());
  const LabelSet cb = set_union(b.topology.columns(), b.device.columns());
  if (!disjoint(ca, cb)) {
    throw MultiportError("label collision between connected multiports");
  }
  const LabelSet ports = set_union(a.ports(), b.ports());
  if (!is_subset(coupling.columns(), ports)) {
    throw MultiportError("coupling uses columns that are not ports");
  }
  ConnectResult res;
  res.composite = {direct_sum(a.topology, b.topology),
                   affine_direct_sum(affine_direct_sum(a.device, b.device), coupling)};
  res.first_rigid = is_rigid(a);
  res.second_rigid = is_rigid(b);
  res.port_pair = pair_rigid(direct_sum(matched(a.topology, a.device.translate()),
                                        matched(b.topology, b.device.translate())),
                             coupling.translate());
  res.rigid = is_rigid(res.composite);
  if (res.rigid != (res.first_rigid && res.second_rigid && res.port_pair.rigid)) {
    throw std::logic_error("connection rigidity disagrees with its decomposition");
  }
  return res;
}

ConnectResult connect(const Multiport& a, const Multiport& b,
                      const AffineSpace& coupling) {
  if (!disjoint(a.graph.edge_labels(), b.graph.edge_labels())) {
    throw MultiportError("label collision between connected multiports");
  }
  return connect(as_generalized(a), as_generalized(b), coupling);
}

}  // namespace rigidmp
