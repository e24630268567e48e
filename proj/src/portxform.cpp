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

#include "rigidmp/portxform.hpp"

#include <stdexcept>

namespace rigidmp {

namespace {

std::size_t rank_of(const LabelSet& cols, const Matrix& rows) {
  return VectorSpace::from_rows(std::vector<Label>(cols.begin(), cols.end()), rows).rank();
}

Matrix embed(const LabelSet& from, const Matrix& rows, const LabelSet& to) {
  Matrix out;
  for (const auto& r : rows) out.push_back(scatter(from, r, to));
  return out;
}

Matrix project(const LabelSet& from, const Matrix& rows, const LabelSet& to) {
  Matrix out;
  for (const auto& r : rows) out.push_back(gather(from, r, to));
  return out;
}

std::vector<Label> ordered(const std::vector<Label>& first, const LabelSet& all) {
  std::vector<Label> out;
  for (const auto& l : first) {
    if (contains(all, l)) out.push_back(l);
  }
  const LabelSet taken = make_set(out);
  for (const auto& l : all) {
    if (!contains(taken, l)) out.push_back(l);
  }
  return out;
}

Matrix block(const LabelSet& cols, const Matrix& rep, const LabelSet& base,
             const std::vector<Label>& row_labels,
             const std::vector<Label>& col_labels) {
  Matrix out;
  for (const auto& r : row_labels) {
    std::size_t k = 0;
    while (base[k] != r) ++k;
    RowVector row;
    for (const auto& c : col_labels) {
      std::size_t j = 0;
      while (cols[j] != c) ++j;
      row.push_back(rep[k][j]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

Matrix negated_transpose(const Matrix& m, std::size_t rows, std::size_t cols) {
  Matrix out(cols, RowVector(rows, Rational(0)));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out[j][i] = -m[i][j];
  }
  return out;
}

}  // namespace

VisibleMinorForm visible_minor_form(const VectorSpace& v, const LabelSet& t) {
  if (!is_subset(t, v.columns())) {
    throw std::invalid_argument("visible_minor_form: T is not a subset of the columns");
  }
  VisibleMinorForm f;
  f.t_cols = t;
  f.r_cols = set_difference(v.columns(), t);
  const VectorSpace xt = contract_to(v, f.t_cols);
  const VectorSpace xr = contract_to(v, f.r_cols);
  f.b1t = xt.basis();
  f.b3r = xr.basis();

  Matrix rows = embed(f.t_cols, f.b1t, v.columns());
  for (const auto& r : embed(f.r_cols, f.b3r, v.columns())) rows.push_back(r);
  std::size_t have = rank_of(v.columns(), rows);
  Matrix middle;
  for (const auto& r : v.basis()) {
    if (have == v.rank()) break;
    rows.push_back(r);
    const std::size_t now = rank_of(v.columns(), rows);
    if (now > have) {
      middle.push_back(r);
      have = now;
    } else {
      rows.pop_back();
    }
  }
  f.b2t = project(v.columns(), middle, f.t_cols);
  f.b2r = project(v.columns(), middle, f.r_cols);
  return f;
}

PortReduction port_reduce_matrix(const VectorSpace& v, const LabelSet& t) {
  PortReduction out;
  out.form = visible_minor_form(v, t);
  const auto& f = out.form;
  const VectorSpace mid = VectorSpace::from_rows(
      std::vector<Label>(f.r_cols.begin(), f.r_cols.end()), f.b2r);
  out.kept = base_extension(mid, {}, {});
  out.dropped = set_difference(f.r_cols, out.kept);
  const LabelSet cols = set_union(f.t_cols, out.kept);
  Matrix rows = embed(f.t_cols, f.b1t, cols);
  for (std::size_t i = 0; i < f.b2t.size(); ++i) {
    RowVector r = scatter(f.t_cols, f.b2t[i], cols);
    const RowVector k = scatter(out.kept, gather(f.r_cols, f.b2r[i], out.kept), cols);
    for (std::size_t c = 0; c < r.size(); ++c) r[c] += k[c];
    rows.push_back(std::move(r));
  }
  out.reduced = VectorSpace::from_rows(std::vector<Label>(cols.begin(), cols.end()), rows);
  return out;
}

GraphPortMinimization graph_port_minimize(const Graph& g, const LabelSet& s,
                                          const TreePreference& pref) {
  const LabelSet edges = g.edge_labels();
  if (!is_subset(s, edges)) {
    throw std::invalid_argument("graph_port_minimize: S is not a set of edges");
  }
  GraphPortMinimization m;
  m.internal = s;
  m.ports = set_difference(edges, s);
  m.t1 = grow_forest(g, {}, std::vector<Label>(s.begin(), s.end()));
  LabelSet t;
  if (!pref.hat_first) {
    const auto order = ordered(pref.first, m.ports);
    t = grow_forest(g, m.t1, order);
    m.t2 = set_difference(t, m.t1);
    m.t2hat = grow_forest(g, m.t2, order);
  } else {
    const LabelSet first = make_set(pref.first);
    const LabelSet others = set_difference(m.ports, first);
    const auto hat_order = ordered(std::vector<Label>(others.begin(), others.end()), m.ports);
    m.t2hat = grow_forest(g, {}, hat_order);
    const LabelSet avoid_first = set_difference(m.t2hat, first);
    t = grow_forest(g, m.t1, ordered(std::vector<Label>(avoid_first.begin(), avoid_first.end()),
                                     m.t2hat));
    m.t2 = set_difference(t, m.t1);
  }
  m.kept = set_difference(m.t2hat, m.t2);
  m.removed = set_difference(m.ports, m.t2hat);
  m.reduced = minor(g, m.removed, m.t2);
  for (const auto& l : m.kept) m.relabel[l] = l;
  return m;
}

AffineSpace internal_model(const VectorSpace& v, const AffineSpace& k) {
  const LabelSet& b = k.columns();
  if (!is_subset(b, v.columns())) {
    throw std::invalid_argument("internal_model: device columns outside the topology");
  }
  const auto meet = affine_intersect(k, AffineSpace::linear(restrict_to(v, b)));
  if (!meet) throw std::invalid_argument("internal_model: device space misses V o B");
  return affine_plus(*meet, contract_to(v, b));
}

bool is_port_transformation(const VectorSpace& sp, const VectorSpace& sq,
                            const LabelSet& s) {
  if (!is_subset(s, sp.columns()) || !is_subset(s, sq.columns())) {
    throw std::invalid_argument("is_port_transformation: S missing from an operand");
  }
  if (restrict_to(sp, s) != restrict_to(sq, s) || contract_to(sp, s) != contract_to(sq, s)) {
    return false;
  }
  const LabelSet p = set_difference(sp.columns(), s);
  const LabelSet q = set_difference(sq.columns(), s);
  if (!disjoint(p, q)) {
    throw std::invalid_argument("is_port_transformation: port sets must be disjoint");
  }
  const VectorSpace pq = matched(sp, sq);
  if (matched(sp, pq) != sq) {
    throw std::logic_error("is_port_transformation: round trip failed");
  }
  return true;
}

LiftData lift_data(const Graph& g, const GraphPortMinimization& m) {
  LiftData d;
  d.t2.assign(m.t2.begin(), m.t2.end());
  d.kept.assign(m.kept.begin(), m.kept.end());
  d.rest.assign(m.removed.begin(), m.removed.end());
  const LabelSet& p = m.ports;
  const VectorSpace vv = kvl_space(g);
  const VectorSpace vi = kcl_space(g);

  const Matrix q2 = rep_on_base(contract_to(vv, p), m.t2);
  d.k_tk = block(p, q2, m.t2, d.t2, d.kept);
  d.k_tr = block(p, q2, m.t2, d.t2, d.rest);
  const Matrix q1 = rep_on_base(restrict_to(vv, p), m.t2hat);
  d.k_kr = block(p, q1, m.t2hat, d.kept, d.rest);

  const Matrix b1 = rep_on_base(contract_to(vi, p), m.removed);
  d.m_rt = block(p, b1, m.removed, d.rest, d.t2);
  d.m_rk = block(p, b1, m.removed, d.rest, d.kept);
  const LabelSet cobase = set_difference(p, m.t2);
  const Matrix b2 = rep_on_base(restrict_to(vi, p), cobase);
  d.m_kt = block(p, b2, cobase, d.kept, d.t2);

  if (d.m_kt != negated_transpose(d.k_tk, d.t2.size(), d.kept.size()) ||
      d.k_kr != negated_transpose(d.m_rk, d.rest.size(), d.kept.size())) {
    throw std::logic_error("lift_data: orthogonality relations fail");
  }
  return d;
}

AffineSpace lift_behaviour(const AffineSpace& reduced, const LiftData& d) {
  const LabelSet kept = make_set(d.kept);
  if (reduced.columns() != set_union(primed(kept), double_primed(kept))) {
    throw std::invalid_argument("lift_behaviour: behaviour is not on the kept ports");
  }
  const auto check = [](const Matrix& m, std::size_t r, std::size_t c) {
    if (m.size() != r) return false;
    for (const auto& row : m) {
      if (row.size() != c) return false;
    }
    return true;
  };
  const std::size_t nt = d.t2.size(), nk = d.kept.size(), nr = d.rest.size();
  if (!check(d.k_tk, nt, nk) || !check(d.k_tr, nt, nr) || !check(d.k_kr, nk, nr) ||
      !check(d.m_kt, nk, nt) || !check(d.m_rt, nr, nt) || !check(d.m_rk, nr, nk)) {
    throw std::invalid_argument("lift_behaviour: block shape mismatch");
  }

  std::vector<Label> all = d.t2;
  all.insert(all.end(), d.kept.begin(), d.kept.end());
  all.insert(all.end(), d.rest.begin(), d.rest.end());
  const LabelSet p = make_set(all);
  const LabelSet cols = set_union(primed(p), double_primed(p));
  const auto at = [&](const Label& l) {
    std::size_t j = 0;
    while (cols[j] != l) ++j;
    return j;
  };

  const auto lift = [&](const RowVector& x) {
    RowVector out(cols.size(), Rational(0));
    for (std::size_t k = 0; k < nk; ++k) {
      const Rational v = x[reduced.translate().index_of(primed(d.kept[k]))];
      const Rational i = x[reduced.translate().index_of(double_primed(d.kept[k]))];
      out[at(primed(d.kept[k]))] += v;
      out[at(double_primed(d.kept[k]))] += i;
      for (std::size_t r = 0; r < nr; ++r) out[at(primed(d.rest[r]))] += v * d.k_kr[k][r];
      for (std::size_t t = 0; t < nt; ++t) out[at(double_primed(d.t2[t]))] += i * d.m_kt[k][t];
    }
    return out;
  };

  Matrix rows;
  for (const auto& b : reduced.translate().basis()) rows.push_back(lift(b));
  for (std::size_t t = 0; t < nt; ++t) {
    RowVector r(cols.size(), Rational(0));
    r[at(primed(d.t2[t]))] = 1;
    for (std::size_t k = 0; k < nk; ++k) r[at(primed(d.kept[k]))] = d.k_tk[t][k];
    for (std::size_t j = 0; j < nr; ++j) r[at(primed(d.rest[j]))] = d.k_tr[t][j];
    rows.push_back(std::move(r));
  }
  for (std::size_t j = 0; j < nr; ++j) {
    RowVector r(cols.size(), Rational(0));
    r[at(double_primed(d.rest[j]))] = 1;
    for (std::size_t t = 0; t < nt; ++t) r[at(double_primed(d.t2[t]))] = d.m_rt[j][t];
    for (std::size_t k = 0; k < nk; ++k) r[at(double_primed(d.kept[k]))] = d.m_rk[j][k];
    rows.push_back(std::move(r));
  }
  return AffineSpace(lift(reduced.offset()),
                     VectorSpace::from_rows(std::vector<Label>(cols.begin(), cols.end()), rows));
}

MinimizedMultiport minimize_ports(const Multiport& n, const TreePreference& pref) {
  validate(n);
  MinimizedMultiport out;
  out.minimization = graph_port_minimize(n.graph, n.internal_edges(), pref);
  out.network.graph = out.minimization.reduced;
  out.network.ports = out.minimization.kept;
  out.network.devices = n.devices;
  out.lift = lift_data(n.graph, out.minimization);
  return out;
}

PortIndependence test_port_independence(const Multiport& n, const LabelSet& p1) {
  if (!is_subset(p1, n.ports)) {
    throw std::invalid_argument("test_port_independence: P1 is not a set of ports");
  }
  PortIndependence r;
  const Multiport h = homogeneous(n);
  const Graph gp = restrict_graph(n.graph, n.ports);
  r.loop_free = is_loop_free(gp, p1);
  r.cutset_free = is_cutset_free(contract_graph(n.graph, n.ports), p1);

  const auto reduced_behaviour = [](const MinimizedMultiport& m) {
    const auto b = port_behaviour(m.network);
    if (!b) throw std::logic_error("homogeneous behaviour is void");
    return b->translate();
  };

  std::vector<Label> first(p1.begin(), p1.end());
  if (r.loop_free) {
    const auto m = minimize_ports(h, {first, false});
    const VectorSpace v = reduced_behaviour(m);
    const LabelSet cols = primed(set_intersection(p1, m.minimization.kept));
    const LabelSet vp = primed(m.minimization.kept);
    r.prime_restriction = is_independent(restrict_to(v, vp), cols);
    r.prime_contraction = is_independent(contract_to(v, vp), cols);
  }
  if (r.cutset_free) {
    const auto m = minimize_ports(h, {first, true});
    const VectorSpace v = reduced_behaviour(m);
    const LabelSet cols = double_primed(set_intersection(p1, m.minimization.kept));
    const LabelSet ip = double_primed(m.minimization.kept);
    r.dprime_restriction = is_independent(restrict_to(v, ip), cols);
    r.dprime_contraction = is_independent(contract_to(v, ip), cols);
  }
  return r;
}

}  // namespace rigidmp
