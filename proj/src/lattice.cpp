#include "coxchain/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>

#include "coxchain/error.hpp"
#include "coxchain/parallel.hpp"

namespace coxchain {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent[a] = b;
    return true;
  }
};

// Renumber arbitrary class labels by first occurrence.
std::vector<int> normalize_partition(const std::vector<int>& labels, int* count) {
  std::map<int, int> renumber;
  std::vector<int> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = renumber.emplace(labels[i], static_cast<int>(renumber.size()));
    out[i] = it->second;
  }
  *count = static_cast<int>(renumber.size());
  return out;
}

std::string arc_text(int a, int b) { return std::to_string(a) + "<" + std::to_string(b); }

}  // namespace

Lattice::Lattice(int n, std::vector<Arc> covers) : n_(n), covers_(std::move(covers)) {
  if (n <= 0) throw InvalidArgument("a lattice needs at least one element");
  std::sort(covers_.begin(), covers_.end());
  if (std::adjacent_find(covers_.begin(), covers_.end()) != covers_.end())
    throw InvalidArgument("duplicate cover relation");
  up_.assign(n, {});
  up_edge_.assign(n, {});
  down_.assign(n, {});
  down_edge_.assign(n, {});
  std::vector<int> indegree(n, 0);
  for (int e = 0; e < num_edges(); ++e) {
    auto [lo, hi] = covers_[e];
    if (lo < 0 || hi < 0 || lo >= n || hi >= n || lo == hi)
      throw InvalidArgument("bad cover relation " + arc_text(lo, hi));
    up_[lo].push_back(hi);
    up_edge_[lo].push_back(e);
    down_[hi].push_back(lo);
    down_edge_[hi].push_back(e);
    ++indegree[hi];
  }
  for (int x = 0; x < n; ++x) {
    std::vector<std::size_t> idx(down_[x].size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return down_[x][a] < down_[x][b]; });
    std::vector<int> d, de;
    for (auto i : idx) {
      d.push_back(down_[x][i]);
      de.push_back(down_edge_[x][i]);
    }
    down_[x] = std::move(d);
    down_edge_[x] = std::move(de);
  }

  // topological order, smallest id first among ready elements
  std::vector<int> topo;
  std::set<int> ready;
  for (int x = 0; x < n; ++x)
    if (indegree[x] == 0) ready.insert(x);
  while (!ready.empty()) {
    int x = *ready.begin();
    ready.erase(ready.begin());
    topo.push_back(x);
    for (int y : up_[x])
      if (--indegree[y] == 0) ready.insert(y);
  }
  if (static_cast<int>(topo.size()) != n) throw InvalidArgument("cover relation has a cycle");
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[topo[i]] = i;

  int bottoms = 0, tops = 0;
  for (int x = 0; x < n; ++x) {
    if (down_[x].empty()) {
      bottom_ = x;
      ++bottoms;
    }
    if (up_[x].empty()) {
      top_ = x;
      ++tops;
    }
  }
  if (bottoms != 1 || tops != 1) throw InvalidArgument("poset is not bounded");

  rank_.assign(n, 0);
  for (int x : topo)
    for (int y : up_[x]) rank_[y] = std::max(rank_[y], rank_[x] + 1);

  upset_.assign(n, Bits(n));
  downset_.assign(n, Bits(n));
  std::vector<Bits> up_topo(n, Bits(n)), down_topo(n, Bits(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int x = *it;
    upset_[x].set(x);
    up_topo[x].set(pos[x]);
    for (int y : up_[x]) {
      upset_[x] |= upset_[y];
      up_topo[x] |= up_topo[y];
    }
  }
  for (int x : topo) {
    downset_[x].set(x);
    down_topo[x].set(n - 1 - pos[x]);
    for (int y : down_[x]) {
      downset_[x] |= downset_[y];
      down_topo[x] |= down_topo[y];
    }
  }
  // every listed cover must be a genuine cover
  for (auto [lo, hi] : covers_)
    for (int z : up_[lo])
      if (z != hi && upset_[z][hi])
        throw InvalidArgument("relation " + arc_text(lo, hi) + " is not a cover");

  join_.assign(std::size_t(n) * n, -1);
  meet_.assign(std::size_t(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      Bits ub = up_topo[a] & up_topo[b];
      int j = topo[ub.find_first()];
      if (up_topo[j].count() != ub.count())
        throw InvalidArgument("elements " + std::to_string(a) + " and " + std::to_string(b) +
                              " have no join");
      Bits lb = down_topo[a] & down_topo[b];
      if (lb.none())
        throw InvalidArgument("elements " + std::to_string(a) + " and " + std::to_string(b) +
                              " have no lower bound");
      int m = topo[n - 1 - lb.find_first()];
      if (down_topo[m].count() != lb.count())
        throw InvalidArgument("elements " + std::to_string(a) + " and " + std::to_string(b) +
                              " have no meet");
      join_[std::size_t(a) * n + b] = join_[std::size_t(b) * n + a] = j;
      meet_[std::size_t(a) * n + b] = meet_[std::size_t(b) * n + a] = m;
    }
  }
}

int Lattice::edge_id(int lo, int hi) const {
  const auto& u = up_[lo];
  auto it = std::lower_bound(u.begin(), u.end(), hi);
  if (it == u.end() || *it != hi) return -1;
  return up_edge_[lo][it - u.begin()];
}

void Lattice::set_labels(std::vector<int> labels, int universe) {
  if (static_cast<int>(labels.size()) != num_edges())
    throw InvalidArgument("one label per cover is required");
  for (int l : labels)
    if (l < 0 || l >= universe) throw InvalidArgument("label outside the label universe");
  labels_ = std::move(labels);
  label_universe_ = universe;
}

std::optional<Polygon> polygon_of_interval(const Lattice& L, int x, int z) {
  if (x == z || !L.leq(x, z)) return std::nullopt;
  Bits interval = L.up_set(x) & L.down_set(z);
  auto inside_up = [&](int v) {
    std::vector<int> out;
    for (int y : L.up(v))
      if (interval[y]) out.push_back(y);
    return out;
  };
  auto atoms = inside_up(x);
  if (atoms.size() != 2) return std::nullopt;
  Polygon p;
  p.min = x;
  p.max = z;
  std::vector<int>* sides[2] = {&p.left, &p.right};
  for (int k = 0; k < 2; ++k) {
    auto& side = *sides[k];
    side = {x, atoms[k]};
    while (side.back() != z) {
      auto next = inside_up(side.back());
      if (next.size() != 1) return std::nullopt;
      side.push_back(next[0]);
    }
  }
  std::size_t covered = p.left.size() + p.right.size() - 2;
  if (covered != interval.count()) return std::nullopt;
  // sides must meet only at the ends
  std::set<int> inner(p.left.begin() + 1, p.left.end() - 1);
  for (std::size_t i = 1; i + 1 < p.right.size(); ++i)
    if (inner.count(p.right[i])) return std::nullopt;
  // every inner element needs exactly one lower neighbour in the interval
  for (auto* side : sides)
    for (std::size_t i = 1; i < side->size(); ++i) {
      int v = (*side)[i];
      int below = 0;
      for (int y : L.down(v))
        if (interval[y]) ++below;
      if (v == z ? below != 2 : below != 1) return std::nullopt;
    }
  return p;
}

namespace {

// [meet, y] for two lower covers of y, checked with the same routine as
// the primal condition.
bool dual_polygon(const Lattice& L, int y, int a, int b) {
  int m = L.meet(a, b);
  auto p = polygon_of_interval(L, m, y);
  if (!p) return false;
  int la = p->left[p->left.size() - 2], ra = p->right[p->right.size() - 2];
  return (la == a && ra == b) || (la == b && ra == a);
}

}  // namespace

std::optional<std::string> polygonal_violation(const Lattice& L) {
  for (int x = 0; x < L.size(); ++x) {
    const auto& u = L.up(x);
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = i + 1; j < u.size(); ++j)
        if (!polygon_of_interval(L, x, L.join(u[i], u[j])))
          return "[" + std::to_string(x) + ", " + std::to_string(u[i]) + " v " +
                 std::to_string(u[j]) + "] is not a polygon";
    const auto& d = L.down(x);
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = i + 1; j < d.size(); ++j)
        if (!dual_polygon(L, x, d[i], d[j]))
          return "[" + std::to_string(d[i]) + " ^ " + std::to_string(d[j]) + ", " +
                 std::to_string(x) + "] is not a polygon";
  }
  return std::nullopt;
}

PolygonIndex enumerate_polygons(const Lattice& L) {
  if (auto v = polygonal_violation(L)) throw InvalidArgument("lattice is not polygonal: " + *v);
  PolygonIndex idx;
  idx.by_min.assign(L.size(), {});
  for (int x = 0; x < L.size(); ++x) {
    const auto& u = L.up(x);
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = i + 1; j < u.size(); ++j) {
        auto p = polygon_of_interval(L, x, L.join(u[i], u[j]));
        idx.by_min[x].push_back(static_cast<int>(idx.polygons.size()));
        idx.polygons.push_back(std::move(*p));
      }
  }
  return idx;
}

Forcing forcing_preorder(const Lattice& L, const PolygonIndex& polys) {
  const int E = L.num_edges();
  std::vector<std::vector<int>> succ(E);
  auto eid = [&](int a, int b) { return L.edge_id(a, b); };
  for (const auto& p : polys.polygons) {
    int bl = eid(p.left[0], p.left[1]);
    int tl = eid(p.left[p.left.size() - 2], p.left.back());
    int br = eid(p.right[0], p.right[1]);
    int tr = eid(p.right[p.right.size() - 2], p.right.back());
    succ[bl].push_back(tr);
    succ[tr].push_back(bl);
    succ[br].push_back(tl);
    succ[tl].push_back(br);
    for (const auto* side : {&p.left, &p.right})
      for (std::size_t i = 1; i + 2 < side->size(); ++i) {
        int mid = eid((*side)[i], (*side)[i + 1]);
        for (int e : {bl, tl, br, tr}) succ[e].push_back(mid);
      }
  }
  Forcing F;
  F.forces.assign(E, Bits(E));
  std::vector<int> stack;
  for (int e = 0; e < E; ++e) {
    Bits& seen = F.forces[e];
    seen.set(e);
    stack.assign(1, e);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : succ[x])
        if (!seen[y]) {
          seen.set(y);
          stack.push_back(y);
        }
    }
  }
  F.edge_class.assign(E, -1);
  for (int e = 0; e < E; ++e) {
    if (F.edge_class[e] >= 0) continue;
    for (int f = e; f < E; ++f)
      if (F.forces[e][f] && F.forces[f][e]) F.edge_class[f] = F.num_classes;
    ++F.num_classes;
  }
  return F;
}

std::optional<std::string> forcing_consistency_violation(const Lattice& L, const Forcing& F) {
  if (!L.labelled()) return "lattice carries no labels";
  std::vector<int> first(F.num_classes, -1);
  for (int e = 0; e < L.num_edges(); ++e) {
    int k = F.edge_class[e];
    if (first[k] < 0) {
      first[k] = e;
    } else if (L.label(first[k]) != L.label(e)) {
      auto [a, b] = L.edge(first[k]);
      auto [c, d] = L.edge(e);
      return "forcing-equivalent edges " + arc_text(a, b) + " and " + arc_text(c, d) +
             " carry different labels";
    }
  }
  return std::nullopt;
}

Congruence congruence_from_partition(const Lattice& L, const std::vector<int>& partition) {
  if (static_cast<int>(partition.size()) != L.size())
    throw InvalidArgument("partition size does not match lattice");
  Congruence th;
  th.class_of = normalize_partition(partition, &th.num_classes);
  th.members.assign(th.num_classes, {});
  for (int x = 0; x < L.size(); ++x) th.members[th.class_of[x]].push_back(x);
  for (int e = 0; e < L.num_edges(); ++e)
    if (th.contracts(L, e)) th.removed_edges.push_back(e);

  for (int k = 0; k < th.num_classes; ++k) {
    const auto& m = th.members[k];
    Bits in(L.size());
    for (int x : m) in.set(x);
    int lo = m[0], hi = m[0];
    for (int x : m) {
      lo = L.meet(lo, x);
      hi = L.join(hi, x);
    }
    if (!in[lo] || !in[hi] || (L.up_set(lo) & L.down_set(hi)) != in)
      throw VerificationFailure("congruence class " + std::to_string(k) + " is not an interval");
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        for (int z = 0; z < L.size(); ++z) {
          if (th.class_of[L.join(m[i], z)] != th.class_of[L.join(m[j], z)] ||
              th.class_of[L.meet(m[i], z)] != th.class_of[L.meet(m[j], z)])
            throw VerificationFailure("congruence law fails for " + std::to_string(m[i]) + ", " +
                                      std::to_string(m[j]) + " against " + std::to_string(z));
        }
  }
  return th;
}

Congruence congruence_from_edges(const Lattice& L, const Forcing& F, const std::vector<int>& seed) {
  Bits contracted(L.num_edges());
  for (int e : seed) {
    if (e < 0 || e >= L.num_edges()) throw InvalidArgument("seed edge out of range");
    contracted |= F.forces[e];
  }
  UnionFind uf(L.size());
  for (auto e = contracted.find_first(); e != Bits::npos; e = contracted.find_next(e))
    uf.unite(L.edge(static_cast<int>(e)).first, L.edge(static_cast<int>(e)).second);
  std::vector<int> part(L.size());
  for (int x = 0; x < L.size(); ++x) part[x] = uf.find(x);
  Congruence th = congruence_from_partition(L, part);
  for (int e : th.removed_edges)
    if (!contracted[e])
      throw VerificationFailure("forcing closure missed a contracted edge");
  return th;
}

Quotient quotient(const Lattice& L, const Congruence& theta) {
  const int k = theta.num_classes;
  std::set<Arc> arcs;
  for (auto [lo, hi] : L.covers()) {
    int a = theta.class_of[lo], b = theta.class_of[hi];
    if (a != b) arcs.emplace(a, b);
  }
  Preorder order(k, std::vector<Arc>(arcs.begin(), arcs.end()));
  if (!order.is_poset()) throw VerificationFailure("quotient relation is not antisymmetric");
  auto covers = order.covers();
  std::set<Arc> cover_set(covers.begin(), covers.end());
  for (const auto& a : arcs)
    if (!cover_set.count(a))
      throw VerificationFailure("a cover maps to a non-cover " + arc_text(a.first, a.second));
  Quotient Q{Lattice(k, std::move(covers)), theta.class_of};
  for (int a = 0; a < L.size(); ++a)
    for (int b = a + 1; b < L.size(); ++b) {
      if (Q.q[L.join(a, b)] != Q.lattice.join(Q.q[a], Q.q[b]) ||
          Q.q[L.meet(a, b)] != Q.lattice.meet(Q.q[a], Q.q[b]))
        throw VerificationFailure("quotient map is not a lattice homomorphism");
    }
  if (auto v = polygonal_violation(Q.lattice))
    throw VerificationFailure("quotient of a polygonal lattice is not polygonal: " + *v);
  return Q;
}

std::vector<int> quotient_edge_labels(const Lattice& L, const Congruence& theta, const Quotient& Q) {
  if (!L.labelled()) throw InvalidArgument("quotient labelling needs a labelled lattice");
  std::vector<int> labels(Q.lattice.num_edges(), -1);
  for (int e = 0; e < L.num_edges(); ++e) {
    auto [lo, hi] = L.edge(e);
    int a = theta.class_of[lo], b = theta.class_of[hi];
    if (a == b) continue;
    int qe = Q.lattice.edge_id(a, b);
    if (qe < 0) throw VerificationFailure("surviving edge does not map to a cover");
    if (labels[qe] < 0)
      labels[qe] = L.label(e);
    else if (labels[qe] != L.label(e))
      throw VerificationFailure("quotient label not constant on cover " + arc_text(a, b));
  }
  for (int qe = 0; qe < Q.lattice.num_edges(); ++qe)
    if (labels[qe] < 0) throw VerificationFailure("quotient cover without a representative");
  return labels;
}

ChainIterator::ChainIterator(const Lattice& L, MaxChain prefix)
    : L_(&L), base_(prefix.size()), path_(std::move(prefix)) {
  if (path_.empty()) path_.push_back(L.bottom());
}

bool ChainIterator::next(MaxChain& out) {
  if (done_) return false;
  const Lattice& L = *L_;
  if (!started_) {
    started_ = true;
    // descend along first choices
    while (path_.back() != L.top()) {
      choice_.push_back(0);
      path_.push_back(L.up(path_.back())[0]);
    }
    out = path_;
    return true;
  }
  // backtrack to the deepest position with an unused alternative
  while (!choice_.empty()) {
    path_.pop_back();
    std::size_t c = choice_.back() + 1;
    choice_.pop_back();
    const auto& u = L.up(path_.back());
    if (c < u.size()) {
      choice_.push_back(c);
      path_.push_back(u[c]);
      while (path_.back() != L.top()) {
        choice_.push_back(0);
        path_.push_back(L.up(path_.back())[0]);
      }
      out = path_;
      return true;
    }
  }
  (void)base_;
  done_ = true;
  return false;
}

ChainSet enumerate_chains(const Lattice& L, std::size_t max_chains, int jobs) {
  ChainSet set;
  if (L.size() == 1) {
    set.chains.push_back({L.bottom()});
  } else {
    const auto& atoms = L.up(L.bottom());
    std::vector<std::vector<MaxChain>> parts(atoms.size());
    std::atomic<std::size_t> total{0};
    parallel_for(atoms.size(), jobs, [&](std::size_t i) {
      ChainIterator it(L, {L.bottom(), atoms[i]});
      MaxChain c;
      while (it.next(c)) {
        if (++total > max_chains)
          throw GuardExceeded("more than " + std::to_string(max_chains) + " maximal chains");
        parts[i].push_back(c);
      }
    });
    for (auto& p : parts)
      for (auto& c : p) set.chains.push_back(std::move(c));
  }
  set.index.reserve(set.chains.size());
  for (std::size_t i = 0; i < set.chains.size(); ++i)
    set.index.emplace(set.chains[i], static_cast<int>(i));
  return set;
}

MaxChain chain_image(const std::vector<int>& q, const MaxChain& chain) {
  MaxChain out;
  for (int x : chain)
    if (out.empty() || out.back() != q[x]) out.push_back(q[x]);
  return out;
}

std::vector<int> chain_labels(const Lattice& L, const MaxChain& chain) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    int e = L.edge_id(chain[i], chain[i + 1]);
    if (e < 0) throw InvalidArgument("consecutive chain elements are not a cover");
    out.push_back(L.labelled() ? L.label(e) : e);
  }
  return out;
}

std::vector<ChainMove> polygon_move_neighbors(const Lattice& L, const PolygonIndex& polys,
                                              const MaxChain& chain) {
  std::vector<ChainMove> out;
  (void)L;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (int pid : polys.by_min[chain[i]]) {
      const Polygon& p = polys.polygons[pid];
      for (int k = 0; k < 2; ++k) {
        const auto& side = k == 0 ? p.left : p.right;
        const auto& other = k == 0 ? p.right : p.left;
        if (i + side.size() > chain.size()) continue;
        if (!std::equal(side.begin(), side.end(), chain.begin() + i)) continue;
        ChainMove mv;
        mv.polygon = pid;
        mv.from_left = (k == 0);
        mv.result.assign(chain.begin(), chain.begin() + i);
        mv.result.insert(mv.result.end(), other.begin(), other.end());
        mv.result.insert(mv.result.end(), chain.begin() + i + side.size(), chain.end());
        out.push_back(std::move(mv));
      }
    }
  }
  return out;
}

SquareClasses square_equivalence_classes(const Lattice& L, const PolygonIndex& polys,
                                         const ChainSet& chains, int jobs) {
  const int n = static_cast<int>(chains.size());
  std::vector<std::vector<std::pair<int, bool>>> nbrs(n);
  parallel_for(n, jobs, [&](std::size_t i) {
    for (auto& mv : polygon_move_neighbors(L, polys, chains.chains[i])) {
      int j = chains.find(mv.result);
      if (j < 0) throw VerificationFailure("polygon move left the chain set");
      nbrs[i].emplace_back(j, polys.polygons[mv.polygon].square());
    }
  });
  UnionFind squares(n), all(n);
  for (int i = 0; i < n; ++i)
    for (auto [j, sq] : nbrs[i]) {
      all.unite(i, j);
      if (sq) squares.unite(i, j);
    }
  SquareClasses out;
  std::vector<int> root_class(n, -1);
  out.class_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = squares.find(i);
    if (root_class[r] < 0) {
      root_class[r] = out.count++;
      out.representative.push_back(i);
    }
    out.class_of[i] = root_class[r];
  }
  out.polygon_connected = true;
  for (int i = 0; i < n; ++i)
    if (all.find(i) != all.find(0)) out.polygon_connected = false;
  return out;
}

namespace {

bool side_is_monotone(const Lattice& L, const std::vector<int>& side, const Preorder& ref,
                      bool ascending) {
  for (std::size_t i = 0; i + 2 < side.size(); ++i) {
    int a = L.label(L.edge_id(side[i], side[i + 1]));
    int b = L.label(L.edge_id(side[i + 1], side[i + 2]));
    if (ascending ? !ref.less(a, b) : !ref.less(b, a)) return false;
  }
  return true;
}

}  // namespace

std::optional<std::string> polygonal_labelling_violation(const Lattice& L,
                                                         const PolygonIndex& polys,
                                                         const Preorder& reference) {
  if (!L.labelled()) return "lattice carries no labels";
  if (reference.size() != L.label_universe()) return "reference order has the wrong size";
  for (std::size_t k = 0; k < polys.polygons.size(); ++k) {
    const Polygon& p = polys.polygons[k];
    if (p.square()) continue;
    bool la = side_is_monotone(L, p.left, reference, true);
    bool ld = side_is_monotone(L, p.left, reference, false);
    bool ra = side_is_monotone(L, p.right, reference, true);
    bool rd = side_is_monotone(L, p.right, reference, false);
    if (!((la && rd) || (ra && ld)))
      return "polygon [" + std::to_string(p.min) + ", " + std::to_string(p.max) +
             "] has no ascending/descending pair of sides";
  }
  return std::nullopt;
}

bool left_side_ascends(const Lattice& L, const Polygon& p, const Preorder& reference) {
  return side_is_monotone(L, p.left, reference, true);
}

void finish_mg(MGPoset& mg) {
  const int k = static_cast<int>(mg.classes.size());
  std::sort(mg.moves.begin(), mg.moves.end());
  mg.moves.erase(std::unique(mg.moves.begin(), mg.moves.end()), mg.moves.end());
  mg.order = Preorder(k, mg.moves);
  mg.is_poset = mg.order.is_poset();
  mg.covers = mg.order.covers();
  std::set<Arc> cover_set(mg.covers.begin(), mg.covers.end());
  mg.polygon_complete = mg.self_moves == 0;
  for (const auto& a : mg.moves)
    if (!cover_set.count(a)) mg.polygon_complete = false;
  mg.minima = mg.order.minimal();
  mg.maxima = mg.order.maximal();
}

MGPoset mg_preorder(const Lattice& L, const PolygonIndex& polys, const ChainSet& chains,
                    const SquareClasses& squares, const Preorder& reference, int jobs) {
  Forcing F = forcing_preorder(L, polys);
  if (auto v = forcing_consistency_violation(L, F))
    throw VerificationFailure("labelling is not forcing-consistent: " + *v);
  if (auto v = polygonal_labelling_violation(L, polys, reference))
    throw VerificationFailure("labelling is not polygonal: " + *v);

  std::vector<char> left_up(polys.polygons.size(), 0);
  for (std::size_t k = 0; k < polys.polygons.size(); ++k)
    left_up[k] = !polys.polygons[k].square() && left_side_ascends(L, polys.polygons[k], reference);

  const int n = static_cast<int>(chains.size());
  std::vector<std::vector<Arc>> found(n);
  std::vector<std::size_t> self(n, 0);
  parallel_for(n, jobs, [&](std::size_t i) {
    for (auto& mv : polygon_move_neighbors(L, polys, chains.chains[i])) {
      const Polygon& p = polys.polygons[mv.polygon];
      if (p.square()) continue;
      // increasing: leave the ascending side
      if (mv.from_left != static_cast<bool>(left_up[mv.polygon])) continue;
      int j = chains.find(mv.result);
      int a = squares.class_of[i], b = squares.class_of[j];
      if (a == b)
        ++self[i];
      else
        found[i].emplace_back(a, b);
    }
  });
  MGPoset mg;
  mg.chain_class = squares.class_of;
  for (int r : squares.representative) mg.classes.push_back(ChainClass{Bits(), r});
  for (int i = 0; i < n; ++i) {
    mg.self_moves += self[i];
    mg.moves.insert(mg.moves.end(), found[i].begin(), found[i].end());
  }
  finish_mg(mg);
  return mg;
}

}  // namespace coxchain
