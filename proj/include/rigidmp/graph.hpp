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

#ifndef RIGIDMP_GRAPH_HPP_
#define RIGIDMP_GRAPH_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rigidmp/colspace.hpp"
#include "rigidmp/label.hpp"

namespace rigidmp {

struct Edge {
  Label label;
  std::string tail;
  std::string head;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Directed multigraph with labeled edges. Self-loops and parallel edges are
// allowed; vertex names are opaque.
class Graph {
 public:
  void add_vertex(const std::string& v);
  void add_edge(const Label& label, const std::string& tail,
                const std::string& head);

  // Sorted by label.
  const std::vector<Edge>& edges() const { return edges_; }
  // Sorted by name.
  const std::vector<std::string>& vertices() const { return vertices_; }
  LabelSet edge_labels() const;
  bool has_edge(const Label& l) const;
  const Edge& edge(const Label& l) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

// Voltage space: v_e = phi(tail) - phi(head).
VectorSpace kvl_space(const Graph& g);
// Current space, built from fundamental circuits; equals kvl_space(g)^perp.
VectorSpace kcl_space(const Graph& g);

Graph minor(const Graph& g, const LabelSet& remove, const LabelSet& contract);
// G o T and G x T.
Graph restrict_graph(const Graph& g, const LabelSet& t);
Graph contract_graph(const Graph& g, const LabelSet& t);

class ForestError : public std::runtime_error {
 public:
  enum class Kind { kLoopInInclude, kCutsetInAvoid };
  ForestError(Kind kind, LabelSet witness, const std::string& what)
      : std::runtime_error(what), kind_(kind), witness_(std::move(witness)) {}
  Kind kind() const { return kind_; }
  const LabelSet& witness() const { return witness_; }

 private:
  Kind kind_;
  LabelSet witness_;
};

// Maximal forest containing `include`, disjoint from `avoid`, grown by
// `prefer` order and then label order.
LabelSet constrained_forest(const Graph& g, const LabelSet& include,
                            const LabelSet& avoid,
                            const std::vector<Label>& prefer = {});
LabelSet spanning_forest(const Graph& g);
// Grows `start` (assumed loop-free) with edges taken in `order`.
LabelSet grow_forest(const Graph& g, const LabelSet& start,
                     const std::vector<Label>& order);

bool is_loop_free(const Graph& g, const LabelSet& t);
bool is_cutset_free(const Graph& g, const LabelSet& t);
// A circuit inside t, or empty when t is loop-free.
LabelSet find_loop(const Graph& g, const LabelSet& t);
// A minimal cutset inside t, or empty when t is cutset-free.
LabelSet find_cutset(const Graph& g, const LabelSet& t);

std::size_t graph_rank(const Graph& g);

using SignedEdges = std::vector<std::pair<Label, int>>;
// For each cotree edge c: c with +1 and the tree path closing it, signed +1
// where the edge agrees with the traversal direction of c.
std::vector<std::pair<Label, SignedEdges>> fundamental_circuits(
    const Graph& g, const LabelSet& forest);
// For each tree edge t: edges crossing from t's tail side to its head side
// get +1, the reverse direction -1.
std::vector<std::pair<Label, SignedEdges>> fundamental_cutsets(
    const Graph& g, const LabelSet& forest);

}  // namespace rigidmp

#endif  // RIGIDMP_GRAPH_HPP_
