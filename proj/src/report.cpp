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

#include "rigidmp/report.hpp"

#include <stdexcept>

namespace rigidmp {

namespace {

Json rat(const Rational& q) { return to_string(q); }

Json names(const std::vector<Label>& s) {
  Json out = Json::array();
  for (const auto& l : s) out.push_back(to_string(l));
  return out;
}

Json vec(const RowVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rat(q));
  return out;
}

Json mat(const Matrix& m) {
  Json out = Json::array();
  for (const auto& r : m) out.push_back(vec(r));
  return out;
}

Json by_column(const LabelSet& cols, const RowVector& v) {
  Json out = Json::object();
  for (std::size_t j = 0; j < cols.size(); ++j) out[to_string(cols[j])] = rat(v[j]);
  return out;
}

Json parameters(const Netlist& n) {
  Json out = Json::object();
  for (const auto& d : n.network.devices) {
    if (contains(n.defaulted, d.edge)) out[to_string(d.edge)] = rat(d.value);
  }
  return out;
}

const char* pass(bool b) { return b ? "pass" : "fail"; }

Json witness(const TopologyCheck& c) {
  Json w = Json::object();
  if (!c.loop.empty()) w["loop"] = names(c.loop);
  if (!c.cutset.empty()) w["cutset"] = names(c.cutset);
  return w;
}

Json space(const AffineSpace& a) {
  return {{"columns", names(a.columns())},
          {"offset", vec(a.offset())},
          {"basis", mat(a.translate().basis())},
          {"rank", a.translate().rank()}};
}

Json labeled_block(const std::vector<Label>& rows, const std::vector<Label>& cols,
                   const Matrix& m) {
  return {{"rows", names(rows)}, {"columns", names(cols)}, {"entries", mat(m)}};
}

Json verdict(const RigidVerdict& v) {
  Json out = {{"rigid", v.rigid},
              {"full_sum", v.full_sum_holds},
              {"zero_intersection", v.zero_intersection_holds},
              {"shared", names(v.shared)}};
  if (v.full_sum_witness) out["full_sum_witness"] = by_column(v.shared, *v.full_sum_witness);
  if (v.zero_intersection_witness) {
    out["zero_intersection_witness"] = by_column(v.shared, *v.zero_intersection_witness);
  }
  return out;
}

}  // namespace

std::string render(const Json& j) { return j.dump(2) + "\n"; }

Json rigidity_report(const Netlist& nl) {
  const Multiport& n = nl.network;
  Json out = {{"command", "rigidity"}, {"parameters", parameters(nl)}};
  const TopologyCheck nec = necessity_check(n);
  const TopologyCheck suf = sufficiency_check(n);
  out["necessity"] = pass(nec.pass);
  out["sufficiency"] = pass(suf.pass);
  const bool exact = is_rigid(as_generalized(n));
  out["exact_rigid"] = exact;
  if (!nec.pass) {
    out["verdict"] = "not_rigid";
    out["witness"] = witness(nec);
    return out;
  }
  if (!suf.pass) out["sufficiency_witness"] = witness(suf);
  if (suf.pass) {
    out["verdict"] = "rigid";
    return out;
  }
  const MatroidalVerdict m = matroidal_rigidity(n);
  out["matroidal"] = {{"hypotheses_hold", m.hypotheses_hold}, {"rigid", m.rigid}};
  if (m.bases) {
    out["matroidal"]["topology_base"] = names(m.bases->first);
    out["matroidal"]["device_base"] = names(m.bases->second);
  }
  if (!m.hypotheses_hold) {
    out["verdict"] = exact ? "rigid" : "not_rigid";
    out["basis"] = "exact";
  } else if (!m.rigid) {
    out["verdict"] = "not_rigid";
    out["basis"] = "generic";
  } else {
    out["verdict"] = "generic_rigid_exact_unknown";
    out["basis"] = "generic";
  }
  return out;
}

Json hybrid_report(const Netlist& nl) {
  Json out = {{"command", "hybrid"}, {"parameters", parameters(nl)}};
  HybridRep h;
  try {
    h = hybrid_rep(nl.network);
  } catch (const MultiportError& e) {
    out["status"] = "unavailable";
    out["reason"] = e.what();
    return out;
  }
  out["status"] = "ok";
  out["p1"] = names(h.p1);
  out["p2"] = names(h.p2);
  out["forest"] = names(h.forest);
  out["g11"] = mat(h.g11);
  out["h12"] = mat(h.h12);
  out["h21"] = mat(h.h21);
  out["r22"] = mat(h.r22);
  out["s1"] = vec(h.s1);
  out["s2"] = vec(h.s2);
  return out;
}

Json solve_report(const Netlist& nl, const PortAssignment& assignment) {
  const SolveResult r = solve(nl.network, assignment);
  Json out = {{"command", "solve"}, {"parameters", parameters(nl)}};
  Json given = Json::object();
  for (const auto& [l, q] : assignment) given[to_string(l)] = rat(q);
  out["assignment"] = given;
  out["status"] = to_string(r.status);
  if (r.status == SolveStatus::kInconsistent) {
    Json cert = Json::array();
    for (std::size_t k = 0; k < r.certificate.size(); ++k) {
      if (r.certificate[k] != 0) cert.push_back({{"equation", r.rows[k]}, {"weight", rat(r.certificate[k])}});
    }
    out["certificate"] = cert;
    return out;
  }
  out["solution"] = by_column(r.columns, r.solution);
  if (r.status == SolveStatus::kUnderdetermined) {
    Json k = Json::array();
    for (const auto& row : r.kernel) k.push_back(by_column(r.columns, row));
    out["kernel"] = k;
  }
  return out;
}

Json behaviour_report(const Netlist& nl) {
  Json out = {{"command", "behaviour"}, {"parameters", parameters(nl)}};
  const auto b = port_behaviour(nl.network);
  if (!b) {
    out["status"] = "void";
    return out;
  }
  out["status"] = "ok";
  out["behaviour"] = space(*b);
  return out;
}

Json minports_report(const Netlist& nl) {
  const MinimizedMultiport m = minimize_ports(nl.network);
  const auto& g = m.minimization;
  Json out = {{"command", "minports"}, {"parameters", parameters(nl)}};
  out["ports"] = names(g.ports);
  out["kept"] = names(g.kept);
  out["removed"] = names(g.removed);
  out["t1"] = names(g.t1);
  out["t2"] = names(g.t2);
  out["t2hat"] = names(g.t2hat);
  Json rel = Json::object();
  for (const auto& [a, b] : g.relabel) rel[to_string(a)] = to_string(b);
  out["relabel"] = rel;
  Netlist reduced;
  reduced.network = m.network;
  reduced.defaulted = nl.defaulted;
  out["netlist"] = emit_netlist(reduced);
  const LiftData& d = m.lift;
  out["blocks"] = {{"K_t2_kept", labeled_block(d.t2, d.kept, d.k_tk)},
                   {"K_t2_removed", labeled_block(d.t2, d.rest, d.k_tr)},
                   {"K_kept_removed", labeled_block(d.kept, d.rest, d.k_kr)},
                   {"M_kept_t2", labeled_block(d.kept, d.t2, d.m_kt)},
                   {"M_removed_t2", labeled_block(d.rest, d.t2, d.m_rt)},
                   {"M_removed_kept", labeled_block(d.rest, d.kept, d.m_rk)}};
  return out;
}

Json independence_report(const Netlist& nl, const LabelSet& p1) {
  const PortIndependence r = test_port_independence(nl.network, p1);
  return {{"command", "independence"},
          {"parameters", parameters(nl)},
          {"ports", names(p1)},
          {"loop_free", r.loop_free},
          {"cutset_free", r.cutset_free},
          {"voltage_restriction", r.prime_restriction},
          {"voltage_contraction", r.prime_contraction},
          {"current_restriction", r.dprime_restriction},
          {"current_contraction", r.dprime_contraction}};
}

Json matroid_union_report(const Netlist& nl) {
  const Multiport& n = nl.network;
  Json out = {{"command", "matroid-union"}, {"parameters", parameters(nl)}};
  const auto gm = graphic_matroid(n.graph);
  const auto cm = cographic_matroid(n.graph);
  const MaxDistantBases gc = union_max_distant(gm, cm);
  out["graphic_cographic"] = {{"union_rank", gc.union_rank},
                              {"graphic_base", names(gc.b1)},
                              {"cographic_base", names(gc.b2)}};
  const MatroidalVerdict m = matroidal_rigidity(n);
  Json mv = {{"hypotheses_hold", m.hypotheses_hold}, {"rigid", m.rigid}};
  if (m.bases) {
    mv["topology_base"] = names(m.bases->first);
    mv["device_base"] = names(m.bases->second);
  }
  mv["port_base"] = names(m.port_base);
  out["topology_device"] = mv;
  const auto port = linking(topo_matroid(n.graph), generic_device_matroid(n));
  out["port_matroid"] = {{"ground", names(port->ground())},
                         {"rank", port->full_rank()},
                         {"base", names(port->basis_of(port->ground()))}};
  return out;
}

Json connect_report(const Netlist& a, const Netlist& b) {
  const ConnectResult r = connect(a.network, b.network, coupling_space(a));
  Json out = {{"command", "connect"}};
  out["rigid"] = r.rigid;
  out["first_rigid"] = r.first_rigid;
  out["second_rigid"] = r.second_rigid;
  out["port_pair"] = verdict(r.port_pair);
  out["ports"] = names(r.composite.ports());
  const auto beh = behaviour(r.composite);
  if (beh) {
    out["behaviour"] = space(*beh);
  } else {
    out["behaviour"] = nullptr;
  }
  return out;
}

std::pair<Label, Rational> parse_port_value(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw std::invalid_argument("expected <column>=<value>: " + text);
  std::string key = text.substr(0, eq);
  const Rational value = parse_rational(text.substr(eq + 1));
  Label l;
  if (key.size() > 3 && (key[0] == 'v' || key[0] == 'i') && key[1] == '(' && key.back() == ')') {
    const Label base = parse_label(key.substr(2, key.size() - 3));
    l = key[0] == 'v' ? primed(base) : double_primed(base);
  } else {
    l = parse_label(key);
  }
  if (l.decoration == Decoration::kPlain) {
    throw std::invalid_argument("port column must be p' or p\": " + key);
  }
  return {l, value};
}

}  // namespace rigidmp
