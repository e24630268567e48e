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

#include "rigidmp/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>

namespace rigidmp {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

struct Indexed {
  std::map<std::string, std::size_t> vertex;
  std::map<Label, std::size_t> edge;
};

Indexed index(const Graph& g) {
  Indexed ix;
  for (std::size_t i = 0; i < g.vertices().size(); ++i) ix.vertex[g.vertices()[i]] = i;
  for (std::size_t i = 0; i < g.edges().size(); ++i) ix.edge[g.edges()[i].label] = i;
  return ix;
}

struct Step {
  std::size_t to;
  std::size_t edge;
};

using Adjacency = std::vector<std::vector<Step>>;

Adjacency forest_adjacency(const Graph& g, const Indexed& ix,
                           const LabelSet& forest) {
  Adjacency adj(g.vertices().size());
  for (const auto& l : forest) {
    const std::size_t e = ix.edge.at(l);
    const std::size_t a = ix.vertex.at(g.edges()[e].tail);
    const std::size_t b = ix.vertex.at(g.edges()[e].head);
    adj[a].push_back({b, e});
    adj[b].push_back({a, e});
  }
  return adj;
}

// Tree path from `from` to `to` as a list of (edge index, entered vertex).
std::optional<std::vector<std::pair<std::size_t, std::size_t>>> tree_path(
    const Adjacency& adj, std::size_t from, std::size_t to) {
  std::vector<std::optional<Step>> prev(adj.size());
  std::vector<bool> seen(adj.size(), false);
  std::deque<std::size_t> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    if (x == to) break;
    for (const auto& s : adj[x]) {
      if (seen[s.to]) continue;
      seen[s.to] = true;
      prev[s.to] = Step{x, s.edge};
      queue.push_back(s.to);
    }
  }
  if (!seen[to]) return std::nullopt;
  std::vector<std::pair<std::size_t, std::size_t>> path;
  for (std::size_t x = to; x != from; x = prev[x]->to) {
    path.emplace_back(prev[x]->edge, x);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<bool> reachable(const Adjacency& adj, std::size_t start,
                            std::size_t banned_edge) {
  std::vector<bool> seen(adj.size(), false);
  std::deque<std::size_t> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (const auto& s : adj[x]) {
      if (s.edge == banned_edge || seen[s.to]) continue;
      seen[s.to] = true;
      queue.push_back(s.to);
    }
  }
  return seen;
}

void require_edges(const Graph& g, const LabelSet& t, const char* what) {
  for (const auto& l : t) {
    if (!g.has_edge(l)) {
      throw std::invalid_argument(std::string(what) + ": unknown edge '" +
                                  to_string(l) + "'");
    }
  }
}

}  // namespace

void Graph::add_vertex(const std::string& v) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) vertices_.insert(it, v);
}

void Graph::add_edge(const Label& label, const std::string& tail,
                     const std::string& head) {
  if (has_edge(label)) {
    throw std::invalid_argument("duplicate edge label '" + to_string(label) +
                                "'");
  }
  add_vertex(tail);
  add_vertex(head);
  Edge e{label, tail, head};
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), label,
      [](const Edge& x, const Label& l) { return x.label < l; });
  edges_.insert(it, std::move(e));
}

LabelSet Graph::edge_labels() const {
  LabelSet out;
  for (const auto& e : edges_) out.push_back(e.label);
  return out;
}

bool Graph::has_edge(const Label& l) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), l,
      [](const Edge& x, const Label& y) { return x.label < y; });
  return it != edges_.end() && it->label == l;
}

const Edge& Graph::edge(const Label& l) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), l,
      [](const Edge& x, const Label& y) { return x.label < y; });
  if (it == edges_.end() || it->label != l) {
    throw std::invalid_argument("unknown edge '" + to_string(l) + "'");
  }
  return *it;
}

VectorSpace kvl_space(const Graph& g) {
  const auto ix = index(g);
  const LabelSet cols = g.edge_labels();
  Matrix rows(g.vertices().size(), RowVector(cols.size(), Rational(0)));
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& ed = g.edges()[e];
    if (ed.tail == ed.head) continue;
    rows[ix.vertex.at(ed.tail)][e] += 1;
    rows[ix.vertex.at(ed.head)][e] -= 1;
  }
  return VectorSpace::from_rows(cols, rows);
}

VectorSpace kcl_space(const Graph& g) {
  const LabelSet cols = g.edge_labels();
  Matrix rows;
  for (const auto& [c, signed_edges] : fundamental_circuits(g, spanning_forest(g))) {
    RowVector r(cols.size(), Rational(0));
    for (const auto& [l, s] : signed_edges) {
      r[static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), l) -
                                 cols.begin())] += s;
    }
    rows.push_back(std::move(r));
  }
  VectorSpace v = VectorSpace::from_rows(cols, rows);
  if (v != orthocomplement(kvl_space(g))) {
    throw std::logic_error("current space is not the voltage complement");
  }
  return v;
}

Graph minor(const Graph& g, const LabelSet& remove, const LabelSet& contract) {
  require_edges(g, remove, "minor");
  require_edges(g, contract, "minor");
  if (!disjoint(remove, contract)) {
    throw std::invalid_argument("minor: deleted and contracted sets overlap");
  }
  const auto ix = index(g);
  UnionFind uf(g.vertices().size());
  for (const auto& l : contract) {
    const auto& e = g.edge(l);
    uf.unite(ix.vertex.at(e.tail), ix.vertex.at(e.head));
  }
  // Representative name: the smallest name in the class.
  std::vector<std::string> name(g.vertices().size());
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    const std::size_t r = uf.find(v);
    if (name[r].empty() || g.vertices()[v] < name[r]) name[r] = g.vertices()[v];
  }
  Graph out;
  for (std::size_t v = 0; v < g.vertices().size(); ++v) out.add_vertex(name[uf.find(v)]);
  for (const auto& e : g.edges()) {
    if (contains(remove, e.label) || contains(contract, e.label)) continue;
    out.add_edge(e.label, name[uf.find(ix.vertex.at(e.tail))],
                 name[uf.find(ix.vertex.at(e.head))]);
  }
  return out;
}

Graph restrict_graph(const Graph& g, const LabelSet& t) {
  return minor(g, set_difference(g.edge_labels(), t), {});
}

Graph contract_graph(const Graph& g, const LabelSet& t) {
  return minor(g, {}, set_difference(g.edge_labels(), t));
}

LabelSet grow_forest(const Graph& g, const LabelSet& start,
                     const std::vector<Label>& order) {
  const auto ix = index(g);
  UnionFind uf(g.vertices().size());
  LabelSet forest = start;
  for (const auto& l : start) {
    const auto& e = g.edge(l);
    uf.unite(ix.vertex.at(e.tail), ix.vertex.at(e.head));
  }
  for (const auto& l : order) {
    if (contains(forest, l)) continue;
    const auto& e = g.edge(l);
    if (uf.unite(ix.vertex.at(e.tail), ix.vertex.at(e.head))) {
      forest = set_union(forest, {l});
    }
  }
  return forest;
}

LabelSet constrained_forest(const Graph& g, const LabelSet& include,
                            const LabelSet& avoid,
                            const std::vector<Label>& prefer) {
  require_edges(g, include, "constrained_forest");
  require_edges(g, avoid, "constrained_forest");
  if (!disjoint(include, avoid)) {
    throw std::invalid_argument("constrained_forest: include and avoid overlap");
  }
  const auto ix = index(g);
  UnionFind uf(g.vertices().size());
  LabelSet forest;
  for (const auto& l : include) {
    const auto& e = g.edge(l);
    const std::size_t a = ix.vertex.at(e.tail), b = ix.vertex.at(e.head);
    if (!uf.unite(a, b)) {
      LabelSet cycle{l};
      if (a != b) {
        const auto adj = forest_adjacency(g, ix, forest);
        const auto path = tree_path(adj, a, b);
        for (const auto& [edge, v] : *path) {
          cycle.push_back(g.edges()[edge].label);
        }
      }
      throw ForestError(ForestError::Kind::kLoopInInclude, make_set(cycle),
                        "required edges contain a loop");
    }
    forest.push_back(l);
  }
  std::vector<Label> order;
  for (const auto& l : prefer) {
    if (g.has_edge(l) && !contains(avoid, l)) order.push_back(l);
  }
  for (const auto& e : g.edges()) {
    if (!contains(avoid, e.label)) order.push_back(e.label);
  }
  forest = grow_forest(g, forest, order);

  // Every avoided edge must close a loop with the forest.
  const auto adj = forest_adjacency(g, ix, forest);
  for (const auto& l : avoid) {
    const auto& e = g.edge(l);
    const std::size_t a = ix.vertex.at(e.tail), b = ix.vertex.at(e.head);
    const auto side = reachable(adj, a, static_cast<std::size_t>(-1));
    if (side[b]) continue;
    // Component D of (whole component minus side) around b; its boundary is
    // a bond made of avoided edges.
    Adjacency rest(g.vertices().size());
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      const auto& f = g.edges()[i];
      const std::size_t x = ix.vertex.at(f.tail), y = ix.vertex.at(f.head);
      if (side[x] || side[y]) continue;
      rest[x].push_back({y, i});
      rest[y].push_back({x, i});
    }
    const auto d = reachable(rest, b, static_cast<std::size_t>(-1));
    LabelSet cut;
    for (const auto& f : g.edges()) {
      const bool in_t = d[ix.vertex.at(f.tail)], in_h = d[ix.vertex.at(f.head)];
      if (in_t != in_h) cut.push_back(f.label);
    }
    throw ForestError(ForestError::Kind::kCutsetInAvoid, make_set(cut),
                      "avoided edges contain a cutset");
  }
  return forest;
}

LabelSet spanning_forest(const Graph& g) { return constrained_forest(g, {}, {}); }

bool is_loop_free(const Graph& g, const LabelSet& t) {
  return find_loop(g, t).empty();
}

bool is_cutset_free(const Graph& g, const LabelSet& t) {
  return find_cutset(g, t).empty();
}

LabelSet find_loop(const Graph& g, const LabelSet& t) {
  try {
    constrained_forest(g, t, {});
  } catch (const ForestError& e) {
    return e.witness();
  }
  return {};
}

LabelSet find_cutset(const Graph& g, const LabelSet& t) {
  try {
    constrained_forest(g, {}, t);
  } catch (const ForestError& e) {
    return e.witness();
  }
  return {};
}

std::size_t graph_rank(const Graph& g) { return spanning_forest(g).size(); }

std::vector<std::pair<Label, SignedEdges>> fundamental_circuits(
    const Graph& g, const LabelSet& forest) {
  const auto ix = index(g);
  const auto adj = forest_adjacency(g, ix, forest);
  std::vector<std::pair<Label, SignedEdges>> out;
  for (const auto& c : g.edges()) {
    if (contains(forest, c.label)) continue;
    SignedEdges circuit{{c.label, 1}};
    const std::size_t a = ix.vertex.at(c.tail), b = ix.vertex.at(c.head);
    if (a != b) {
      const auto path = tree_path(adj, b, a);
      if (!path) throw std::invalid_argument("forest is not maximal");
      std::size_t at = b;
      for (const auto& [edge, next] : *path) {
        const auto& e = g.edges()[edge];
        const bool agrees = ix.vertex.at(e.tail) == at && ix.vertex.at(e.head) == next;
        circuit.emplace_back(e.label, agrees ? 1 : -1);
        at = next;
      }
    }
    out.emplace_back(c.label, std::move(circuit));
  }
  return out;
}

std::vector<std::pair<Label, SignedEdges>> fundamental_cutsets(
    const Graph& g, const LabelSet& forest) {
  const auto ix = index(g);
  const auto adj = forest_adjacency(g, ix, forest);
  std::vector<std::pair<Label, SignedEdges>> out;
  for (const auto& l : forest) {
    const std::size_t te = ix.edge.at(l);
    const auto& t = g.edges()[te];
    const auto x = reachable(adj, ix.vertex.at(t.tail), te);
    const auto y = reachable(adj, ix.vertex.at(t.head), te);
    SignedEdges cut;
    for (const auto& e : g.edges()) {
      const std::size_t a = ix.vertex.at(e.tail), b = ix.vertex.at(e.head);
      if (x[a] && y[b]) cut.emplace_back(e.label, 1);
      if (y[a] && x[b]) cut.emplace_back(e.label, -1);
    }
    out.emplace_back(l, std::move(cut));
  }
  return out;
}

}  // namespace rigidmp
