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

#include "rigidmp/colspace.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rigidmp {

namespace {

// Maps each label of `from` to its position in `to`.
std::vector<std::size_t> positions(const LabelSet& from, const LabelSet& to) {
  std::vector<std::size_t> pos;
  pos.reserve(from.size());
  auto it = to.begin();
  for (const auto& l : from) {
    it = std::lower_bound(it, to.end(), l);
    pos.push_back(static_cast<std::size_t>(it - to.begin()));
  }
  return pos;
}

void require_subset(const LabelSet& t, const LabelSet& cols,
                    const char* what) {
  if (!is_subset(t, cols)) {
    auto extra = set_difference(t, cols);
    throw std::invalid_argument(std::string(what) + ": label '" +
                                to_string(extra.front()) +
                                "' is not a column of the space");
  }
}

VectorSpace canonical(LabelSet columns, Matrix rows) {
  return VectorSpace::from_rows(columns, rows);
}

}  // namespace

VectorSpace VectorSpace::from_rows(const std::vector<Label>& labels,
                                   const Matrix& rows) {
  for (const auto& r : rows) {
    if (r.size() != labels.size()) {
      throw std::invalid_argument("row width " + std::to_string(r.size()) +
                                  " does not match " +
                                  std::to_string(labels.size()) + " labels");
    }
  }
  VectorSpace v;
  v.columns_ = make_set(labels);
  if (v.columns_.size() != labels.size()) {
    throw std::invalid_argument("duplicate column label");
  }
  const auto pos = [&] {
    std::vector<std::size_t> p(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      p[i] = static_cast<std::size_t>(
          std::lower_bound(v.columns_.begin(), v.columns_.end(), labels[i]) -
          v.columns_.begin());
    }
    return p;
  }();
  Matrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    RowVector row(labels.size(), Rational(0));
    for (std::size_t i = 0; i < r.size(); ++i) row[pos[i]] = r[i];
    m.push_back(std::move(row));
  }
  v.pivots_ = rref(m, labels.size());
  v.basis_ = std::move(m);
  return v;
}

VectorSpace VectorSpace::full(const LabelSet& columns) {
  return from_rows(columns, identity_matrix(columns.size()));
}

VectorSpace VectorSpace::zero(const LabelSet& columns) {
  return from_rows(columns, {});
}

std::size_t VectorSpace::index_of(const Label& l) const {
  auto it = std::lower_bound(columns_.begin(), columns_.end(), l);
  if (it == columns_.end() || *it != l) {
    throw std::invalid_argument("unknown column '" + to_string(l) + "'");
  }
  return static_cast<std::size_t>(it - columns_.begin());
}

LabelSet VectorSpace::pivot_labels() const {
  LabelSet out;
  for (auto p : pivots_) out.push_back(columns_[p]);
  return out;
}

bool VectorSpace::contains_vector(const RowVector& v) const {
  if (v.size() != columns_.size()) return false;
  RowVector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational f = r[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < r.size(); ++c) r[c] -= f * basis_[i][c];
  }
  return is_zero(r);
}

AffineSpace::AffineSpace(RowVector offset, VectorSpace translate)
    : offset_(std::move(offset)), translate_(std::move(translate)) {
  if (offset_.size() != translate_.width()) {
    throw std::invalid_argument("offset width does not match translate");
  }
  const auto& b = translate_.basis();
  const auto& piv = translate_.pivots();
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Rational f = offset_[piv[i]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < offset_.size(); ++c) offset_[c] -= f * b[i][c];
  }
}

AffineSpace AffineSpace::linear(VectorSpace translate) {
  RowVector zero(translate.width(), Rational(0));
  return AffineSpace(std::move(zero), std::move(translate));
}

bool AffineSpace::contains_vector(const RowVector& v) const {
  if (v.size() != offset_.size()) return false;
  RowVector d = v;
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= offset_[i];
  return translate_.contains_vector(d);
}

RowVector scatter(const LabelSet& from, const RowVector& v,
                  const LabelSet& to) {
  RowVector out(to.size(), Rational(0));
  const auto pos = positions(from, to);
  for (std::size_t i = 0; i < from.size(); ++i) out[pos[i]] = v[i];
  return out;
}

RowVector gather(const LabelSet& from, const RowVector& v,
                 const LabelSet& to) {
  RowVector out;
  out.reserve(to.size());
  const auto pos = positions(to, from);
  for (auto p : pos) out.push_back(v[p]);
  return out;
}

VectorSpace restrict_to(const VectorSpace& v, const LabelSet& t) {
  require_subset(t, v.columns(), "restrict");
  Matrix rows;
  for (const auto& r : v.basis()) rows.push_back(gather(v.columns(), r, t));
  return canonical(t, std::move(rows));
}

VectorSpace contract_to(const VectorSpace& v, const LabelSet& t) {
  require_subset(t, v.columns(), "contract");
  const LabelSet rest = set_difference(v.columns(), t);
  // Eliminate on the complement first; rows whose leading entry lies in t
  // vanish on the complement.
  const std::size_t k = rest.size();
  Matrix m;
  for (const auto& r : v.basis()) {
    RowVector row = gather(v.columns(), r, rest);
    RowVector tail = gather(v.columns(), r, t);
    row.insert(row.end(), tail.begin(), tail.end());
    m.push_back(std::move(row));
  }
  const auto piv = rref(m, m.empty() ? 0 : m.front().size());
  Matrix rows;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (piv[i] >= k) rows.emplace_back(m[i].begin() + k, m[i].end());
  }
  return canonical(t, std::move(rows));
}

VectorSpace orthocomplement(const VectorSpace& v) {
  return canonical(v.columns(), null_space(v.basis(), v.width()));
}

VectorSpace pad_to(const VectorSpace& v, const LabelSet& columns) {
  require_subset(v.columns(), columns, "pad");
  Matrix rows;
  for (const auto& r : v.basis()) rows.push_back(scatter(v.columns(), r, columns));
  return canonical(columns, std::move(rows));
}

VectorSpace sum(const VectorSpace& a, const VectorSpace& b) {
  const LabelSet u = set_union(a.columns(), b.columns());
  Matrix rows;
  for (const auto& r : a.basis()) rows.push_back(scatter(a.columns(), r, u));
  for (const auto& r : b.basis()) rows.push_back(scatter(b.columns(), r, u));
  return canonical(u, std::move(rows));
}

VectorSpace intersect(const VectorSpace& a, const VectorSpace& b) {
  return orthocomplement(sum(orthocomplement(a), orthocomplement(b)));
}

VectorSpace direct_sum(const VectorSpace& a, const VectorSpace& b) {
  if (!disjoint(a.columns(), b.columns())) {
    throw std::invalid_argument("direct sum of spaces with shared columns");
  }
  return sum(a, b);
}

VectorSpace negate_on(const VectorSpace& v, const LabelSet& t) {
  Matrix rows = v.basis();
  for (const auto& l : t) {
    if (!v.has_column(l)) continue;
    const std::size_t c = v.index_of(l);
    for (auto& r : rows) r[c] = -r[c];
  }
  return canonical(v.columns(), std::move(rows));
}

VectorSpace relabel(const VectorSpace& v,
                    const std::function<Label(const Label&)>& f) {
  std::vector<Label> labels;
  for (const auto& l : v.columns()) labels.push_back(f(l));
  return VectorSpace::from_rows(labels, v.basis());
}

VectorSpace matched(const VectorSpace& sp, const VectorSpace& pq) {
  const LabelSet p = set_intersection(sp.columns(), pq.columns());
  const LabelSet sq = set_difference(set_union(sp.columns(), pq.columns()), p);
  return contract_to(sum(sp, negate_on(pq, p)), sq);
}

VectorSpace skewed(const VectorSpace& sp, const VectorSpace& pq) {
  const LabelSet p = set_intersection(sp.columns(), pq.columns());
  const LabelSet sq = set_difference(set_union(sp.columns(), pq.columns()), p);
  return contract_to(sum(sp, pq), sq);
}

bool is_subspace(const VectorSpace& a, const VectorSpace& b) {
  if (a.columns() != b.columns()) return false;
  for (const auto& r : a.basis()) {
    if (!b.contains_vector(r)) return false;
  }
  return true;
}

std::size_t column_rank(const VectorSpace& v, const LabelSet& cols) {
  return restrict_to(v, cols).rank();
}

bool is_independent(const VectorSpace& v, const LabelSet& cols) {
  return column_rank(v, cols) == cols.size();
}

bool is_column_base(const VectorSpace& v, const LabelSet& cols) {
  return cols.size() == v.rank() && is_independent(v, cols);
}

LabelSet minimal_dependent_subset(const VectorSpace& v, const LabelSet& cols) {
  LabelSet cur = cols;
  for (const auto& l : cols) {
    LabelSet smaller = set_difference(cur, {l});
    if (!is_independent(v, smaller)) cur = std::move(smaller);
  }
  return cur;
}

LabelSet base_extension(const VectorSpace& v, const LabelSet& include,
                        const LabelSet& avoid) {
  require_subset(include, v.columns(), "base_extension");
  if (!disjoint(include, avoid)) {
    throw std::invalid_argument("include and avoid overlap");
  }
  if (!is_independent(v, include)) {
    throw BaseExtensionError(BaseExtensionError::Kind::kIncludeDependent,
                             minimal_dependent_subset(v, include),
                             "include set is dependent");
  }
  const LabelSet allowed = set_difference(v.columns(), avoid);
  if (column_rank(v, allowed) != v.rank()) {
    // A nonzero vector of the space vanishing off `avoid`.
    const VectorSpace inside = contract_to(v, set_intersection(avoid, v.columns()));
    LabelSet support;
    for (std::size_t c = 0; c < inside.width(); ++c) {
      if (inside.basis().front()[c] != 0) support.push_back(inside.columns()[c]);
    }
    throw BaseExtensionError(BaseExtensionError::Kind::kAvoidCoversCobase,
                             support, "avoid set meets every column base");
  }
  // Greedy: keep an echelon form of the chosen columns' restriction.
  LabelSet base = include;
  std::size_t r = include.size();
  for (const auto& l : allowed) {
    if (r == v.rank()) break;
    if (contains(base, l)) continue;
    LabelSet trial = set_union(base, {l});
    if (column_rank(v, trial) == r + 1) {
      base = std::move(trial);
      ++r;
    }
  }
  return base;
}

Matrix rep_on_base(const VectorSpace& v, const LabelSet& base) {
  if (!is_column_base(v, base)) {
    throw std::invalid_argument("rep_on_base: not a column base");
  }
  // Reorder columns so the base comes first; rref then gives identity there.
  const LabelSet rest = set_difference(v.columns(), base);
  Matrix m;
  for (const auto& r : v.basis()) {
    RowVector row = gather(v.columns(), r, base);
    RowVector tail = gather(v.columns(), r, rest);
    row.insert(row.end(), tail.begin(), tail.end());
    m.push_back(std::move(row));
  }
  rref(m, base.size());
  Matrix out;
  for (const auto& row : m) {
    RowVector b(row.begin(), row.begin() + static_cast<long>(base.size()));
    RowVector t(row.begin() + static_cast<long>(base.size()), row.end());
    RowVector full = scatter(base, b, v.columns());
    RowVector tail = scatter(rest, t, v.columns());
    for (std::size_t c = 0; c < full.size(); ++c) full[c] += tail[c];
    out.push_back(std::move(full));
  }
  return out;
}

ImplicitInverse implicit_inverse_check(const VectorSpace& sp,
                                       const VectorSpace& sq) {
  ImplicitInverse res;
  const LabelSet s = set_intersection(sp.columns(), sq.columns());
  res.restriction_ok = is_subspace(restrict_to(sq, s), restrict_to(sp, s));
  res.contraction_ok = is_subspace(contract_to(sp, s), contract_to(sq, s));
  res.exists = res.restriction_ok && res.contraction_ok;
  if (res.exists) {
    VectorSpace cand = matched(sp, sq);
    if (matched(sp, cand) != sq) {
      throw std::logic_error("implicit inverse candidate failed round trip");
    }
    res.candidate = std::move(cand);
  }
  return res;
}

MaybeAffine affine_intersect(const AffineSpace& a, const AffineSpace& b) {
  const LabelSet u = set_union(a.columns(), b.columns());
  const VectorSpace va = sum(a.translate(), VectorSpace::full(
                                                set_difference(u, a.columns())));
  const VectorSpace vb = sum(b.translate(), VectorSpace::full(
                                                set_difference(u, b.columns())));
  const RowVector xa = scatter(a.columns(), a.offset(), u);
  const RowVector xb = scatter(b.columns(), b.offset(), u);
  // xa + la*Ba = xb + lb*Bb  <=>  [Ba; -Bb]^T (la, lb) = xb - xa.
  const std::size_t ra = va.rank();
  const std::size_t n = ra + vb.rank();
  Matrix sys(u.size(), RowVector(n, Rational(0)));
  RowVector rhs(u.size());
  for (std::size_t c = 0; c < u.size(); ++c) {
    for (std::size_t i = 0; i < ra; ++i) sys[c][i] = va.basis()[i][c];
    for (std::size_t j = 0; j < vb.rank(); ++j) sys[c][ra + j] = -vb.basis()[j][c];
    rhs[c] = xb[c] - xa[c];
  }
  const auto lam = solve_linear(sys, rhs, n);
  if (!lam) return std::nullopt;
  RowVector point = xa;
  for (std::size_t i = 0; i < ra; ++i) {
    if ((*lam)[i] == 0) continue;
    for (std::size_t c = 0; c < u.size(); ++c) point[c] += (*lam)[i] * va.basis()[i][c];
  }
  return AffineSpace(std::move(point), intersect(va, vb));
}

AffineSpace affine_restrict(const AffineSpace& a, const LabelSet& t) {
  require_subset(t, a.columns(), "restrict");
  return AffineSpace(gather(a.columns(), a.offset(), t),
                     restrict_to(a.translate(), t));
}

MaybeAffine affine_contract(const AffineSpace& a, const LabelSet& t) {
  require_subset(t, a.columns(), "contract");
  const LabelSet rest = set_difference(a.columns(), t);
  const auto cut = affine_intersect(
      a, AffineSpace::linear(VectorSpace::zero(rest)));
  if (!cut) return std::nullopt;
  return affine_restrict(*cut, t);
}

MaybeAffine affine_matched(const AffineSpace& sp, const AffineSpace& pq) {
  const LabelSet p = set_intersection(sp.columns(), pq.columns());
  const LabelSet sq = set_difference(set_union(sp.columns(), pq.columns()), p);
  const auto both = affine_intersect(sp, pq);
  if (!both) return std::nullopt;
  return affine_restrict(*both, sq);
}

AffineSpace affine_plus(const AffineSpace& a, const VectorSpace& v) {
  if (a.columns() != v.columns()) {
    throw std::invalid_argument("affine_plus: column sets differ");
  }
  return AffineSpace(a.offset(), sum(a.translate(), v));
}

AffineSpace affine_direct_sum(const AffineSpace& a, const AffineSpace& b) {
  const VectorSpace t = direct_sum(a.translate(), b.translate());
  RowVector x = scatter(a.columns(), a.offset(), t.columns());
  const RowVector y = scatter(b.columns(), b.offset(), t.columns());
  for (std::size_t c = 0; c < x.size(); ++c) x[c] += y[c];
  return AffineSpace(std::move(x), t);
}

AffineSpace affine_relabel(const AffineSpace& a,
                           const std::function<Label(const Label&)>& f) {
  const VectorSpace t = relabel(a.translate(), f);
  std::vector<Label> from;
  for (const auto& l : a.columns()) from.push_back(f(l));
  RowVector x(t.width(), Rational(0));
  for (std::size_t i = 0; i < from.size(); ++i) x[t.index_of(from[i])] = a.offset()[i];
  return AffineSpace(std::move(x), t);
}

MaybeAffine solution_set(const std::vector<Label>& labels, const Matrix& c,
                         const RowVector& d) {
  const auto x = solve_linear(c, d, labels.size());
  if (!x) return std::nullopt;
  const VectorSpace rowspace = VectorSpace::from_rows(labels, c);
  const VectorSpace kernel = orthocomplement(rowspace);
  RowVector point(labels.size(), Rational(0));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    point[kernel.index_of(labels[i])] = (*x)[i];
  }
  return AffineSpace(std::move(point), kernel);
}

std::string to_text(const VectorSpace& v) {
  std::ostringstream os;
  os << "labels:";
  for (const auto& l : v.columns()) os << ' ' << to_string(l);
  os << '\n';
  for (const auto& r : v.basis()) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      os << (c ? " " : "") << to_string(r[c]);
    }
    os << '\n';
  }
  return os.str();
}

VectorSpace parse_space_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<Label> labels;
  bool have_labels = false;
  Matrix rows;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!have_labels) {
      if (tok != "labels:") {
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected 'labels:'");
      }
      while (ls >> tok) labels.push_back(parse_label(tok));
      have_labels = true;
      continue;
    }
    RowVector row;
    do {
      try {
        row.push_back(parse_rational(tok));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": " +
                                    e.what());
      }
    } while (ls >> tok);
    if (row.size() != labels.size()) {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": row has " + std::to_string(row.size()) +
                                  " entries, expected " +
                                  std::to_string(labels.size()));
    }
    rows.push_back(std::move(row));
  }
  if (!have_labels) throw std::invalid_argument("missing 'labels:' line");
  return VectorSpace::from_rows(labels, rows);
}

}  // namespace rigidmp
