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

#ifndef RIGIDMP_COLSPACE_HPP_
#define RIGIDMP_COLSPACE_HPP_

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigidmp/label.hpp"
#include "rigidmp/rational.hpp"

namespace rigidmp {

// Row space of a rational matrix whose columns carry labels. The basis is
// kept in reduced row echelon form with columns in label order, so two
// spaces are equal iff their fields are equal.
class VectorSpace {
 public:
  VectorSpace() = default;

  // `labels` may be in any order; row entries follow that order.
  static VectorSpace from_rows(const std::vector<Label>& labels,
                               const Matrix& rows);
  static VectorSpace full(const LabelSet& columns);
  static VectorSpace zero(const LabelSet& columns);

  const LabelSet& columns() const { return columns_; }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::size_t rank() const { return basis_.size(); }
  std::size_t width() const { return columns_.size(); }

  std::size_t index_of(const Label& l) const;
  bool has_column(const Label& l) const { return contains(columns_, l); }
  LabelSet pivot_labels() const;

  // `v` is indexed like columns().
  bool contains_vector(const RowVector& v) const;

  friend bool operator==(const VectorSpace&, const VectorSpace&) = default;

 private:
  LabelSet columns_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

// Affine space offset + translate. The offset is the unique member that is
// zero on the pivot columns of the translate.
class AffineSpace {
 public:
  AffineSpace() = default;
  AffineSpace(RowVector offset, VectorSpace translate);
  static AffineSpace linear(VectorSpace translate);

  const LabelSet& columns() const { return translate_.columns(); }
  const RowVector& offset() const { return offset_; }
  const VectorSpace& translate() const { return translate_; }
  bool is_linear() const { return is_zero(offset_); }
  bool contains_vector(const RowVector& v) const;

  friend bool operator==(const AffineSpace&, const AffineSpace&) = default;

 private:
  RowVector offset_;
  VectorSpace translate_;
};

using MaybeAffine = std::optional<AffineSpace>;

// Minors.
VectorSpace restrict_to(const VectorSpace& v, const LabelSet& t);
VectorSpace contract_to(const VectorSpace& v, const LabelSet& t);
VectorSpace orthocomplement(const VectorSpace& v);

// Extended sum and intersection (each operand padded to the union).
VectorSpace sum(const VectorSpace& a, const VectorSpace& b);
VectorSpace intersect(const VectorSpace& a, const VectorSpace& b);
VectorSpace direct_sum(const VectorSpace& a, const VectorSpace& b);
VectorSpace pad_to(const VectorSpace& v, const LabelSet& columns);

VectorSpace negate_on(const VectorSpace& v, const LabelSet& t);
VectorSpace relabel(const VectorSpace& v,
                    const std::function<Label(const Label&)>& f);

VectorSpace matched(const VectorSpace& sp, const VectorSpace& pq);
VectorSpace skewed(const VectorSpace& sp, const VectorSpace& pq);

bool is_subspace(const VectorSpace& a, const VectorSpace& b);
std::size_t column_rank(const VectorSpace& v, const LabelSet& cols);
bool is_independent(const VectorSpace& v, const LabelSet& cols);
bool is_column_base(const VectorSpace& v, const LabelSet& cols);

class BaseExtensionError : public std::runtime_error {
 public:
  enum class Kind { kIncludeDependent, kAvoidCoversCobase };
  BaseExtensionError(Kind kind, LabelSet witness, const std::string& what)
      : std::runtime_error(what), kind_(kind), witness_(std::move(witness)) {}
  Kind kind() const { return kind_; }
  // A minimal dependent subset of `include`, or the support of a nonzero
  // vector of the space lying inside `avoid`.
  const LabelSet& witness() const { return witness_; }

 private:
  Kind kind_;
  LabelSet witness_;
};

// Column base containing `include` and disjoint from `avoid`; greedy in
// label order.
LabelSet base_extension(const VectorSpace& v, const LabelSet& include,
                        const LabelSet& avoid);
// Smallest-by-greedy dependent subset of a dependent column set.
LabelSet minimal_dependent_subset(const VectorSpace& v, const LabelSet& cols);

// Basis rows that restricted to the column base `base` form the identity,
// rows in base label order.
Matrix rep_on_base(const VectorSpace& v, const LabelSet& base);

struct ImplicitInverse {
  bool exists = false;
  bool restriction_ok = false;   // V_SP o S contains V_SQ o S
  bool contraction_ok = false;   // V_SP x S contained in V_SQ x S
  std::optional<VectorSpace> candidate;
};
// Decides whether V_SP <-> X = V_SQ has a solution X on P u Q.
ImplicitInverse implicit_inverse_check(const VectorSpace& sp,
                                       const VectorSpace& sq);

// Affine operations. Void results are nullopt.
MaybeAffine affine_intersect(const AffineSpace& a, const AffineSpace& b);
AffineSpace affine_restrict(const AffineSpace& a, const LabelSet& t);
MaybeAffine affine_contract(const AffineSpace& a, const LabelSet& t);
MaybeAffine affine_matched(const AffineSpace& sp, const AffineSpace& pq);
AffineSpace affine_plus(const AffineSpace& a, const VectorSpace& v);
AffineSpace affine_direct_sum(const AffineSpace& a, const AffineSpace& b);
AffineSpace affine_relabel(const AffineSpace& a,
                           const std::function<Label(const Label&)>& f);
// {x : c x = d} on the given labels.
MaybeAffine solution_set(const std::vector<Label>& labels, const Matrix& c,
                         const RowVector& d);

// Helpers for labeled vectors.
RowVector scatter(const LabelSet& from, const RowVector& v,
                  const LabelSet& to);
RowVector gather(const LabelSet& from, const RowVector& v, const LabelSet& to);

std::string to_text(const VectorSpace& v);
VectorSpace parse_space_text(const std::string& text);

}  // namespace rigidmp

#endif  // RIGIDMP_COLSPACE_HPP_
