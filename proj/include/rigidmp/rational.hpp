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

#ifndef RIGIDMP_RATIONAL_HPP_
#define RIGIDMP_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rigidmp {

using Rational = mpq_class;
using RowVector = std::vector<Rational>;
using Matrix = std::vector<RowVector>;

// Always "p/q", also for integers ("2/1").
std::string to_string(const Rational& q);

// Accepts "p/q" or an integer, optional sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// In-place reduced row echelon form over the first `ncols` columns.
// Zero rows are removed. Returns the pivot column of each remaining row.
std::vector<std::size_t> rref(Matrix& m, std::size_t ncols);

// Some x with a * x = b, or nullopt. `a` is rows x n.
std::optional<RowVector> solve_linear(const Matrix& a, const RowVector& b,
                                      std::size_t n);

// Basis of {x : a * x = 0}.
Matrix null_space(const Matrix& a, std::size_t n);

Rational dot(const RowVector& x, const RowVector& y);
bool is_zero(const RowVector& x);
Matrix transpose(const Matrix& m, std::size_t ncols);
Matrix identity_matrix(std::size_t n);

}  // namespace rigidmp

#endif  // RIGIDMP_RATIONAL_HPP_
