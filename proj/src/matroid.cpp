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

#include "rigidmp/matroid.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "rigidmp/family.hpp"

namespace rigidmp {

void Matroid::check_subset(const LabelSet& x) const {
  if (!is_subset(x, ground_)) {
    throw std::invalid_argument("label '" +
                                to_string(set_difference(x, ground_).front()) +
                                "' is outside the ground set");
  }
}

std::size_t Matroid::rank(const LabelSet& x) const {
  return basis_of(x).size();
}

LabelSet Matroid::basis_of(const LabelSet& x) const {
  return extend({}, x);
}

LabelSet Matroid::extend(const LabelSet& start, const LabelSet& x,
                         const std::vector<Label>& order) const {
  LabelSet cur = start;
  auto try_add = [&](const Label& l) {
    if (!contains(x, l) || contains(cur, l)) return;
    LabelSet trial = set_union(cur, {l});
    if (is_independent(trial)) cur = std::move(trial);
  };
  for (const auto& l : order) try_add(l);
  for (const auto& l : x) try_add(l);
  return cur;
}

namespace {

class FreeMatroid : public Matroid {
 public:
  explicit FreeMatroid(LabelSet g) : Matroid(std::move(g)) {}
  bool is_independent(const LabelSet& x) const override {
    check_subset(x);
    return true;
  }
  std::size_t rank(const LabelSet& x) const override { return x.size(); }
};

class ZeroMatroid : public Matroid {
 public:
  explicit ZeroMatroid(LabelSet g) : Matroid(std::move(g)) {}
  bool is_independent(const LabelSet& x) const override {
    check_subset(x);
    return x.empty();
  }
  std::size_t rank(const LabelSet&) const override { return 0; }
};

class GraphicMatroid : public Matroid {
 public:
  explicit GraphicMatroid(Graph g) : Matroid(g.edge_labels()), g_(std::move(g)) {
    for (std::size_t i = 0; i < g_.vertices().size(); ++i) vid_[g_.vertices()[i]] = i;
  }
  bool is_independent(const LabelSet& x) const override {
    return forest_size(x) == x.size();
  }
  std::size_t rank(const LabelSet& x) const override { return forest_size(x); }

 private:
  std::size_t forest_size(const LabelSet& x) const {
    check_subset(x);
    std::vector<std::size_t> parent(vid_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    std::size_t n = 0;
    for (const auto& l : x) {
      const auto& e = g_.edge(l);
      const std::size_t a = find(vid_.at(e.tail)), b = find(vid_.at(e.head));
      if (a == b) continue;
      parent[a] = b;
      ++n;
    }
    return n;
  }

  Graph g_;
  std::map<std::string, std::size_t> vid_;
};

class LinearMatroid : public Matroid {
 public:
  explicit LinearMatroid(VectorSpace v) : Matroid(v.columns()), v_(std::move(v)) {}
  bool is_independent(const LabelSet& x) const override {
    check_subset(x);
    return rigidmp::is_independent(v_, x);
  }
  std::size_t rank(const LabelSet& x) const override {
    check_subset(x);
    return column_rank(v_, x);
  }

 private:
  VectorSpace v_;
};

class PartitionMatroid : public Matroid {
 public:
  PartitionMatroid(LabelSet g, std::map<Label, std::size_t> block,
                   std::vector<std::size_t> caps)
      : Matroid(std::move(g)), block_(std::move(block)), caps_(std::move(caps)) {}
  bool is_independent(const LabelSet& x) const override {
    check_subset(x);
    std::vector<std::size_t> used(caps_.size(), 0);
    for (const auto& l : x) {
      const std::size_t b = block_.at(l);
      if (++used[b] > caps_[b]) return false;
    }
    return true;
  }
  std::size_t rank(const LabelSet& x) const override {
    check_subset(x);
    std::vector<std::size_t> used(caps_.size(), 0);
    for (const auto& l : x) ++used[block_.at(l)];
    std::size_t r = 0;
    for (std::size_t b = 0; b < caps_.size(); ++b) r += std::min(used[b], caps_[b]);
    return r;
  }

 private:
  std::map<Label, std::size_t> block_;
  std::vector<std::size_t> caps_;
};

class DualMatroid : public Matroid {
 public:
  explicit DualMatroid(MatroidPtr m)
      : Matroid(m->ground()), m_(std::move(m)), full_(m_->full_rank()) {}
  bool is_independent(const LabelSet& x) const override {
    check_subset(x);
    return m_->rank(set_difference(ground(), x)) == full_;
  }
  std::size_t rank(const LabelSet& x) const override {
    check_subset(x);
    return x.size() + m_->rank(set_difference(ground(), x)) - full_;
  }
  const MatroidPtr& inner() const { return m_; }

 private:
  MatroidPtr m_;
  std::size_t full_;
};

class MinorMatroid : public Matroid {
 public:
  MinorMatroid(MatroidPtr m, const LabelSet& t1, const LabelSet& t2)
      : Matroid(t2), m_(std::move(m)), c_(set_difference(t1, t2)),
        base_(m_->rank(c_)) {}
  bool is_independent(const LabelSet& x) const override {
    return rank(x) == x.size();
  }
  std::size_t rank(const LabelSet& x) const override {
    check_subset(x);
    return m_->rank(set_union(x, c_)) - base_;
  }

 private:
  MatroidPtr m_;
  LabelSet c_;
  std::size_t base_ = 0;
};

class DirectSumMatroid : public Matroid {
 public:
  DirectSumMatroid(MatroidPtr a, MatroidPtr b)
      : Matroid(set_union(a->ground(), b->ground())), a_(std::move(a)),
        b_(std::move(b)) {}
  bool is_independent(const LabelSet& x) const override {
    check_subset(x);
    return a_->is_independent(set_intersection(x, a_->ground())) &&
           b_->is_independent(set_intersection(x, b_->ground()));
  }
  std::size_t rank(const LabelSet& x) const override {
    check_subset(x);
    return a_->rank(set_intersection(x, a_->ground())) +
           b_->rank(set_intersection(x, b_->ground()));
  }

 private:
  MatroidPtr a_, b_;
};

LabelSet ground_union(const std::vector<MatroidPtr>& ms) {
  LabelSet g;
  for (const auto& m : ms) g = set_union(g, m->ground());
  return g;
}

class UnionMatroid : public Matroid {
 public:
  explicit UnionMatroid(std::vector<MatroidPtr> ms)
      : Matroid(ground_union(ms)), ms_(std::move(ms)) {}
  bool is_independent(const LabelSet& x) const override {
    return rank(x) == x.size();
  }
  std::size_t rank(const LabelSet& x) const override {
    check_subset(x);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(x);
      if (it != cache_.end()) return it->second;
    }
    std::size_t r = 0;
    for (const auto& part : union_partition(ms_, x)) r += part.size();
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(x, r);
    return r;
  }

 private:
  std::vector<MatroidPtr> ms_;
  mutable std::mutex mu_;
  mutable std::map<LabelSet, std::size_t> cache_;
};

class RelabeledMatroid : public Matroid {
 public:
  RelabeledMatroid(MatroidPtr m, LabelSet ground, std::map<Label, Label> back)
      : Matroid(std::move(ground)), m_(std::move(m)), back_(std::move(back)) {}
  bool is_independent(const LabelSet& x) const override {
    return m_->is_independent(map_back(x));
  }
  std::size_t rank(const LabelSet& x) const override {
    return m_->rank(map_back(x));
  }

 private:
  LabelSet map_back(const LabelSet& x) const {
    check_subset(x);
    LabelSet out;
    for (const auto& l : x) out.push_back(back_.at(l));
    return make_set(std::move(out));
  }
  MatroidPtr m_;
  std::map<Label, Label> back_;
};

}  // namespace

MatroidPtr free_matroid(const LabelSet& ground) {
  return std::make_shared<FreeMatroid>(ground);
}

MatroidPtr zero_matroid(const LabelSet& ground) {
  return std::make_shared<ZeroMatroid>(ground);
}

MatroidPtr graphic_matroid(const Graph& g) {
  return std::make_shared<GraphicMatroid>(g);
}

MatroidPtr cographic_matroid(const Graph& g) {
  return dual_matroid(graphic_matroid(g));
}

MatroidPtr linear_matroid(const VectorSpace& v) {
  return std::make_shared<LinearMatroid>(v);
}

MatroidPtr partition_matroid(
    const std::vector<std::pair<LabelSet, std::size_t>>& blocks) {
  std::map<Label, std::size_t> owner;
  std::vector<std::size_t> caps;
  LabelSet ground;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (const auto& l : blocks[b].first) {
      if (!owner.emplace(l, b).second) {
        throw std::invalid_argument("partition blocks overlap at '" +
                                    to_string(l) + "'");
      }
      ground.push_back(l);
    }
    caps.push_back(blocks[b].second);
  }
  return std::make_shared<PartitionMatroid>(make_set(std::move(ground)),
                                            std::move(owner), std::move(caps));
}

MatroidPtr dual_matroid(const MatroidPtr& m) {
  if (auto d = std::dynamic_pointer_cast<const DualMatroid>(m)) return d->inner();
  return std::make_shared<DualMatroid>(m);
}

MatroidPtr minor_matroid(const MatroidPtr& m, const LabelSet& t1,
                         const LabelSet& t2) {
  if (!is_subset(t1, m->ground()) || !is_subset(t2, t1)) {
    throw std::invalid_argument("minor: need t2 within t1 within ground");
  }
  return std::make_shared<MinorMatroid>(m, t1, t2);
}

MatroidPtr restrict_matroid(const MatroidPtr& m, const LabelSet& t) {
  return minor_matroid(m, t, t);
}

MatroidPtr contract_matroid(const MatroidPtr& m, const LabelSet& t) {
  return minor_matroid(m, m->ground(), t);
}

MatroidPtr direct_sum_matroid(const MatroidPtr& a, const MatroidPtr& b) {
  if (!disjoint(a->ground(), b->ground())) {
    throw std::invalid_argument("direct sum of matroids with shared elements");
  }
  return std::make_shared<DirectSumMatroid>(a, b);
}

MatroidPtr union_matroid(const std::vector<MatroidPtr>& ms) {
  return std::make_shared<UnionMatroid>(ms);
}

MatroidPtr intersection_matroid(const MatroidPtr& a, const MatroidPtr& b) {
  if (a->ground() != b->ground()) {
    throw std::invalid_argument("intersection needs a common ground set");
  }
  return dual_matroid(union_matroid({dual_matroid(a), dual_matroid(b)}));
}

MatroidPtr relabeled_matroid(const MatroidPtr& m,
                             const std::map<Label, Label>& rename) {
  std::map<Label, Label> back;
  LabelSet ground;
  for (const auto& l : m->ground()) {
    auto it = rename.find(l);
    const Label n = it == rename.end() ? l : it->second;
    if (!back.emplace(n, l).second) {
      throw std::invalid_argument("relabeling is not injective");
    }
    ground.push_back(n);
  }
  return std::make_shared<RelabeledMatroid>(m, make_set(std::move(ground)),
                                            std::move(back));
}

MatroidPtr linking(const MatroidPtr& sp, const MatroidPtr& pq) {
  const LabelSet p = set_intersection(sp->ground(), pq->ground());
  const LabelSet sq =
      set_difference(set_union(sp->ground(), pq->ground()), p);
  return contract_matroid(union_matroid({sp, pq}), sq);
}

bool dual_rank_identity_check(const Matroid& m) {
  MatroidPtr self(&m, [](const Matroid*) {});
  return m.full_rank() + dual_matroid(self)->full_rank() == m.ground().size();
}

std::vector<LabelSet> union_partition(const std::vector<MatroidPtr>& ms,
                                      const LabelSet& x,
                                      const std::vector<Label>& priority) {
  const std::size_t k = ms.size();
  std::vector<LabelSet> parts(k);
  std::map<Label, std::size_t> owner;

  std::vector<Label> order;
  for (const auto& l : priority) {
    if (contains(x, l)) order.push_back(l);
  }
  for (const auto& l : x) {
    if (std::find(order.begin(), order.end(), l) == order.end()) order.push_back(l);
  }

  for (const auto& y : order) {
    // BFS over elements; an edge a -> z (via matroid j) means a can replace
    // z in parts[j]. A sink is a matroid that accepts a directly.
    struct Prev {
      Label from;
      std::size_t via;
    };
    std::map<Label, std::optional<Prev>> prev;
    prev[y] = std::nullopt;
    std::deque<Label> queue{y};
    std::optional<std::pair<Label, std::size_t>> sink;
    while (!queue.empty() && !sink) {
      const Label a = queue.front();
      queue.pop_front();
      auto own = owner.find(a);
      for (std::size_t j = 0; j < k && !sink; ++j) {
        if (own != owner.end() && own->second == j) continue;
        if (!contains(ms[j]->ground(), a)) continue;
        if (ms[j]->is_independent(set_union(parts[j], {a}))) sink = {a, j};
      }
      if (sink) break;
      for (std::size_t j = 0; j < k; ++j) {
        if (own != owner.end() && own->second == j) continue;
        if (!contains(ms[j]->ground(), a)) continue;
        const LabelSet with_a = set_union(parts[j], {a});
        for (const auto& z : parts[j]) {
          if (prev.count(z)) continue;
          if (ms[j]->is_independent(set_difference(with_a, {z}))) {
            prev[z] = Prev{a, j};
            queue.push_back(z);
          }
        }
      }
    }
    if (!sink) continue;
    // Augment: the sink element enters its matroid, and each displaced
    // element along the path is replaced by its predecessor.
    Label cur = sink->first;
    std::size_t into = sink->second;
    while (true) {
      auto own = owner.find(cur);
      if (own != owner.end()) parts[own->second] = set_difference(parts[own->second], {cur});
      parts[into] = set_union(parts[into], {cur});
      owner[cur] = into;
      const auto& p = prev.at(cur);
      if (!p) break;
      into = p->via;
      cur = p->from;
    }
  }
  return parts;
}

MaxDistantBases union_max_distant(const MatroidPtr& m1, const MatroidPtr& m2) {
  const LabelSet g = set_union(m1->ground(), m2->ground());
  auto parts = union_partition({m1, m2}, g);
  MaxDistantBases out;
  out.union_rank = parts[0].size() + parts[1].size();
  out.b1 = m1->extend(parts[0], m1->ground());
  out.b2 = m2->extend(parts[1], m2->ground());
  return out;
}

UnionBase union_base_through(const MatroidPtr& m1, const MatroidPtr& m2,
                             const LabelSet& priority) {
  const LabelSet g = set_union(m1->ground(), m2->ground());
  auto parts = union_partition({m1, m2}, g, priority);
  return {set_union(parts[0], parts[1]), parts[0], parts[1]};
}

MatroidRigidity matroid_pair_rigid(const MatroidPtr& ab, const MatroidPtr& bc) {
  MatroidRigidity res;
  const LabelSet b = set_intersection(ab->ground(), bc->ground());
  const std::size_t r1 = ab->full_rank(), r2 = bc->full_rank();
  const LabelSet g = set_union(ab->ground(), bc->ground());
  const auto parts = union_partition({ab, bc}, g, b);
  const LabelSet covered = set_union(parts[0], parts[1]);
  res.primal_additive = covered.size() == r1 + r2;
  const auto dab = dual_matroid(ab), dbc = dual_matroid(bc);
  res.dual_additive = union_matroid({dab, dbc})->full_rank() ==
                      dab->full_rank() + dbc->full_rank();

  // Minor-level definitions.
  res.full_sum =
      union_matroid({restrict_matroid(ab, b), restrict_matroid(bc, b)})->rank(b) ==
      b.size();
  res.zero_intersection =
      b.empty() ||
      intersection_matroid(contract_matroid(ab, b), contract_matroid(bc, b))
              ->full_rank() == 0;
  res.rigid = res.full_sum && res.zero_intersection;

  const bool disjoint_cover = res.primal_additive && is_subset(b, covered);
  if (res.rigid != disjoint_cover || res.full_sum != res.dual_additive ||
      res.zero_intersection != res.primal_additive) {
    throw std::logic_error("matroid rigidity characterizations disagree");
  }
  if (res.rigid) {
    res.bases = std::make_pair(parts[0], parts[1]);
  } else if (!res.full_sum) {
    res.failure = "dual union rank not additive (full sum property fails)";
  } else {
    res.failure = "union rank not additive (zero intersection property fails)";
  }
  return res;
}

MatroidPtr family_linking(const std::vector<MatroidPtr>& h) {
  std::vector<LabelSet> grounds;
  for (const auto& m : h) grounds.push_back(m->ground());
  validate_associative(grounds);
  return contract_matroid(union_matroid(h), family_free_labels(grounds));
}

MatroidFamilyRigidity matroid_family_rigid(const std::vector<MatroidPtr>& h) {
  std::vector<LabelSet> grounds;
  std::vector<MatroidPtr> duals;
  std::size_t sum_r = 0, sum_d = 0;
  for (const auto& m : h) {
    grounds.push_back(m->ground());
    duals.push_back(dual_matroid(m));
    sum_r += m->full_rank();
    sum_d += duals.back()->full_rank();
  }
  validate_associative(grounds);
  MatroidFamilyRigidity res;
  res.primal_additive = union_matroid(h)->full_rank() == sum_r;
  res.dual_additive = union_matroid(duals)->full_rank() == sum_d;
  res.rigid = res.primal_additive && res.dual_additive;
  return res;
}

}  // namespace rigidmp
