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

#ifndef RIGIDMP_FAMILY_HPP_
#define RIGIDMP_FAMILY_HPP_

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rigidmp/colspace.hpp"

namespace rigidmp {

class AssociativityError : public std::invalid_argument {
 public:
  AssociativityError(Label label, std::size_t count)
      : std::invalid_argument("label '" + to_string(label) + "' occurs in " +
                              std::to_string(count) + " members"),
        label_(std::move(label)) {}
  const Label& label() const { return label_; }

 private:
  Label label_;
};

// Throws AssociativityError if a label occurs in more than two column sets.
void validate_associative(const std::vector<LabelSet>& grounds);

// Labels that belong to exactly one member.
LabelSet family_free_labels(const std::vector<LabelSet>& grounds);

// Member adjacency: i -- j when the column sets share a label.
std::vector<std::pair<std::size_t, std::size_t>> family_graph_edges(
    const std::vector<LabelSet>& grounds);
// Connected components of the member adjacency graph.
std::vector<std::vector<std::size_t>> family_components(
    const std::vector<LabelSet>& grounds);

std::vector<LabelSet> grounds_of(const std::vector<VectorSpace>& h);

// (intersection of all members) o Z.
VectorSpace family_matched(const std::vector<VectorSpace>& h);
// (sum of all members) x Z.
VectorSpace family_skewed(const std::vector<VectorSpace>& h);
MaybeAffine family_matched(const std::vector<AffineSpace>& h);

std::vector<VectorSpace> family_orthocomplement(const std::vector<VectorSpace>& h);

}  // namespace rigidmp

#endif  // RIGIDMP_FAMILY_HPP_
