#include "coxchain/preorder.hpp"

#include <algorithm>
#include <numeric>

#include "coxchain/error.hpp"

namespace coxchain {

std::string bit_string(const Bits& bits) {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) s[i] = '1';
  return s;
}

Preorder::Preorder(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  std::vector<std::vector<int>> succ(n);
  for (auto [a, b] : arcs_) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw InvalidArgument("arc endpoint out of range");
    succ[a].push_back(b);
  }
  up_.assign(n, Bits(n));
  std::vector<int> stack;
  for (int a = 0; a < n; ++a) {
    Bits& seen = up_[a];
    seen.set(a);
    stack.assign(1, a);
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
  down_.assign(n, Bits(n));
  for (int a = 0; a < n; ++a)
    for (auto b = up_[a].find_first(); b != Bits::npos; b = up_[a].find_next(b)) down_[b].set(a);
}

bool Preorder::is_poset() const {
  for (int a = 0; a < n_; ++a)
    if ((up_[a] & down_[a]).count() != 1) return false;
  return true;
}

std::vector<Arc> Preorder::covers() const {
  std::vector<Arc> out;
  for (int x = 0; x < n_; ++x) {
    for (auto y = up_[x].find_first(); y != Bits::npos; y = up_[x].find_next(y)) {
      int yi = static_cast<int>(y);
      if (yi == x || up_[yi][x]) continue;
      if ((up_[x] & down_[yi]).count() == 2) out.emplace_back(x, yi);
    }
  }
  return out;
}

std::vector<int> Preorder::minimal() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x) {
    bool has_smaller = false;
    for (auto y = down_[x].find_first(); y != Bits::npos && !has_smaller; y = down_[x].find_next(y))
      if (!up_[x][y]) has_smaller = true;
    if (!has_smaller) out.push_back(x);
  }
  return out;
}

std::vector<int> Preorder::maximal() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x) {
    bool has_larger = false;
    for (auto y = up_[x].find_first(); y != Bits::npos && !has_larger; y = up_[x].find_next(y))
      if (!down_[x][y]) has_larger = true;
    if (!has_larger) out.push_back(x);
  }
  return out;
}

Collapse collapse(const Preorder& p) {
  Collapse out;
  out.class_of.assign(p.size(), -1);
  int classes = 0;
  for (int a = 0; a < p.size(); ++a) {
    if (out.class_of[a] >= 0) continue;
    Bits same = p.up_set(a) & p.down_set(a);
    for (auto b = same.find_first(); b != Bits::npos; b = same.find_next(b))
      out.class_of[b] = classes;
    ++classes;
  }
  std::vector<Arc> arcs;
  for (auto [a, b] : p.arcs())
    if (out.class_of[a] != out.class_of[b]) arcs.emplace_back(out.class_of[a], out.class_of[b]);
  out.poset = Preorder(classes, std::move(arcs));
  return out;
}

std::vector<int> collapse_map(const Collapse& p, const Collapse& q, const std::vector<int>& f) {
  std::vector<int> out(p.poset.size(), -1);
  for (std::size_t x = 0; x < f.size(); ++x) {
    int cx = p.class_of[x];
    int target = q.class_of[f[x]];
    if (out[cx] >= 0 && out[cx] != target)
      throw VerificationFailure("map is not constant on an equivalence class");
    out[cx] = target;
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ContractionReport check_contraction(const Preorder& domain, const Preorder& codomain,
                                    const std::vector<int>& f) {
  ContractionReport r;
  const int n = domain.size();
  const int m = codomain.size();
  if (static_cast<int>(f.size()) != n) throw InvalidArgument("map size does not match domain");

  std::vector<bool> hit(m, false);
  for (int x = 0; x < n; ++x) {
    if (f[x] < 0 || f[x] >= m) throw InvalidArgument("map value out of range");
    hit[f[x]] = true;
  }
  for (int y = 0; y < m; ++y)
    if (!hit[y]) {
      r.surjective = false;
      r.failures.push_back("not surjective: nothing maps to " + std::to_string(y));
    }

  for (int a = 0; a < n; ++a)
    for (auto b = domain.up_set(a).find_first(); b != Bits::npos; b = domain.up_set(a).find_next(b)) {
      ++r.checked;
      if (!codomain.leq(f[a], f[b])) {
        r.order_preserving = false;
        r.failures.push_back("order not preserved: " + std::to_string(a) + " <= " +
                             std::to_string(b));
      }
    }

  // fibres over equivalence classes of the codomain
  Collapse cc = collapse(codomain);
  std::vector<std::vector<int>> fibre(cc.poset.size());
  for (int x = 0; x < n; ++x) fibre[cc.class_of[f[x]]].push_back(x);
  for (std::size_t k = 0; k < fibre.size(); ++k) {
    const auto& members = fibre[k];
    if (members.empty()) continue;
    UnionFind uf(static_cast<int>(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (domain.leq(members[i], members[j]) || domain.leq(members[j], members[i]))
          uf.unite(static_cast<int>(i), static_cast<int>(j));
    ++r.checked;
    int root = uf.find(0);
    for (std::size_t i = 1; i < members.size(); ++i)
      if (uf.find(static_cast<int>(i)) != root) {
        r.fibres_connected = false;
        r.failures.push_back("disconnected fibre over class " + std::to_string(k) +
                             ": elements " + std::to_string(members[0]) + " and " +
                             std::to_string(members[i]));
        break;
      }
  }

  auto dcov = domain.covers();
  std::vector<std::vector<int>> lifted(m);
  for (auto [x, y] : dcov) lifted[f[x]].push_back(f[y]);
  for (auto& v : lifted) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  for (auto [y1, y2] : codomain.covers()) {
    ++r.checked;
    if (!std::binary_search(lifted[y1].begin(), lifted[y1].end(), y2)) {
      r.covers_lift = false;
      r.failures.push_back("cover " + std::to_string(y1) + " < " + std::to_string(y2) +
                           " has no covering preimage");
    }
  }
  return r;
}

bool is_interval(const Preorder& p, const std::vector<int>& members) {
  if (members.empty()) return false;
  Bits in(p.size());
  for (int x : members) in.set(x);
  int lo = -1, hi = -1;
  for (int x : members) {
    if (in.is_subset_of(p.up_set(x))) lo = x;
    if (in.is_subset_of(p.down_set(x))) hi = x;
  }
  if (lo < 0 || hi < 0) return false;
  return (p.up_set(lo) & p.down_set(hi)) == in;
}

}  // namespace coxchain
