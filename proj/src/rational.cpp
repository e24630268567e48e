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

#include "rigidmp/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace rigidmp {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '-' ||
      den[0] == '+') {
    throw std::invalid_argument("not a rational literal: '" +
                                std::string(text) + "'");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class d{std::string(den)};
  if (d == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) +
                                "'");
  }
  Rational q(mpz_class(n), d);
  q.canonicalize();
  return q;
}

std::vector<std::size_t> rref(Matrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) {
        if (m[row][c] != 0) m[r][c] -= f * m[row][c];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

std::optional<RowVector> solve_linear(const Matrix& a, const RowVector& b,
                                      std::size_t n) {
  Matrix aug;
  aug.reserve(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    RowVector row = a[r];
    row.resize(n);
    row.push_back(b[r]);
    aug.push_back(std::move(row));
  }
  const auto pivots = rref(aug, n + 1);
  RowVector x(n, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == n) return std::nullopt;
    x[pivots[r]] = aug[r][n];
  }
  return x;
}

Matrix null_space(const Matrix& a, std::size_t n) {
  Matrix m = a;
  for (auto& row : m) row.resize(n);
  const auto pivots = rref(m, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RowVector v(n, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational dot(const RowVector& x, const RowVector& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i] != 0 && y[i] != 0) s += x[i] * y[i];
  }
  return s;
}

bool is_zero(const RowVector& x) {
  for (const auto& v : x) {
    if (v != 0) return false;
  }
  return true;
}

Matrix transpose(const Matrix& m, std::size_t ncols) {
  Matrix t(ncols, RowVector(m.size(), Rational(0)));
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < ncols; ++c) t[c][r] = m[r][c];
  }
  return t;
}

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, RowVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace rigidmp
