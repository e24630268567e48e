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

#include "rigidmp/family.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rigidmp {

namespace {

std::map<Label, std::size_t> occurrences(const std::vector<LabelSet>& grounds) {
  std::map<Label, std::size_t> count;
  for (const auto& g : grounds) {
    for (const auto& l : g) ++count[l];
  }
  return count;
}

}  // namespace

void validate_associative(const std::vector<LabelSet>& grounds) {
  for (const auto& [label, n] : occurrences(grounds)) {
    if (n > 2) throw AssociativityError(label, n);
  }
}

LabelSet family_free_labels(const std::vector<LabelSet>& grounds) {
  LabelSet z;
  for (const auto& [label, n] : occurrences(grounds)) {
    if (n == 1) z.push_back(label);
  }
  return z;
}

std::vector<std::pair<std::size_t, std::size_t>> family_graph_edges(
    const std::vector<LabelSet>& grounds) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < grounds.size(); ++i) {
    for (std::size_t j = i + 1; j < grounds.size(); ++j) {
      if (!disjoint(grounds[i], grounds[j])) edges.emplace_back(i, j);
    }
  }
  return edges;
}

std::vector<std::vector<std::size_t>> family_components(
    const std::vector<LabelSet>& grounds) {
  std::vector<std::size_t> parent(grounds.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [i, j] : family_graph_edges(grounds)) parent[find(i)] = find(j);
  std::map<std::size_t, std::vector<std::size_t>> comps;
  for (std::size_t i = 0; i < grounds.size(); ++i) comps[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : comps) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LabelSet> grounds_of(const std::vector<VectorSpace>& h) {
  std::vector<LabelSet> g;
  for (const auto& v : h) g.push_back(v.columns());
  return g;
}

VectorSpace family_matched(const std::vector<VectorSpace>& h) {
  const auto grounds = grounds_of(h);
  validate_associative(grounds);
  if (h.empty()) return VectorSpace::zero({});
  VectorSpace acc = h.front();
  for (std::size_t i = 1; i < h.size(); ++i) acc = intersect(acc, h[i]);
  return restrict_to(acc, family_free_labels(grounds));
}

VectorSpace family_skewed(const std::vector<VectorSpace>& h) {
  const auto grounds = grounds_of(h);
  validate_associative(grounds);
  if (h.empty()) return VectorSpace::zero({});
  VectorSpace acc = h.front();
  for (std::size_t i = 1; i < h.size(); ++i) acc = sum(acc, h[i]);
  return contract_to(acc, family_free_labels(grounds));
}

MaybeAffine family_matched(const std::vector<AffineSpace>& h) {
  std::vector<LabelSet> grounds;
  for (const auto& a : h) grounds.push_back(a.columns());
  validate_associative(grounds);
  if (h.empty()) return AffineSpace::linear(VectorSpace::zero({}));
  MaybeAffine acc = h.front();
  for (std::size_t i = 1; i < h.size() && acc; ++i) acc = affine_intersect(*acc, h[i]);
  if (!acc) return std::nullopt;
  return affine_restrict(*acc, family_free_labels(grounds));
}

std::vector<VectorSpace> family_orthocomplement(
    const std::vector<VectorSpace>& h) {
  std::vector<VectorSpace> out;
  for (const auto& v : h) out.push_back(orthocomplement(v));
  return out;
}

}  // namespace rigidmp
