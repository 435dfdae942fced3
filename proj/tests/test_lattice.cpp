#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "coxchain/error.hpp"
#include "coxchain/lattice.hpp"
#include "coxchain/weak_order.hpp"

using namespace coxchain;

namespace {

Lattice boolean3() {
  std::vector<Arc> covers;
  for (int x = 0; x < 8; ++x)
    for (int b = 0; b < 3; ++b)
      if (!(x >> b & 1)) covers.emplace_back(x, x | 1 << b);
  return Lattice(8, covers);
}

Lattice pentagon() {
  // 0 < a=1 < b=2 < 4, 0 < c=3 < 4
  return Lattice(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

Lattice diamond3() {
  // three atoms under a common top
  return Lattice(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

Lattice hexagon() {
  RootSystem rs(parse_system("A2"));
  return WeakOrder(rs).to_lattice();
}

bool is_congruence(const Lattice& L, const std::vector<int>& part) {
  for (int x = 0; x < L.size(); ++x)
    for (int y = 0; y < L.size(); ++y) {
      if (part[x] != part[y]) continue;
      for (int z = 0; z < L.size(); ++z)
        if (part[L.join(x, z)] != part[L.join(y, z)] || part[L.meet(x, z)] != part[L.meet(y, z)])
          return false;
    }
  return true;
}

// Every set partition of {0..n-1} as restricted growth strings.
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> a(n, 0);
  std::function<void(int, int)> rec = [&](int i, int m) {
    if (i == n) return fn(a);
    for (int k = 0; k <= m + 1; ++k) {
      a[i] = k;
      rec(i + 1, std::max(m, k));
    }
  };
  a[0] = 0;
  rec(1, 0);
}

// Smallest congruence contracting edge e, by scanning all congruences.
std::vector<int> smallest_congruence(const Lattice& L, int e) {
  std::vector<int> best;
  int best_classes = -1;
  for_each_partition(L.size(), [&](const std::vector<int>& p) {
    if (p[L.edge(e).first] != p[L.edge(e).second] || !is_congruence(L, p)) return;
    int k = *std::max_element(p.begin(), p.end()) + 1;
    if (k > best_classes) {
      best_classes = k;
      best = p;
    }
  });
  return best;
}

bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if ((a[x] == a[y]) != (b[x] == b[y])) return false;
  return true;
}

}  // namespace

TEST_CASE("construction rejects non-lattices") {
  CHECK_THROWS_AS(Lattice(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 2}}), InvalidArgument);  // not a cover
  CHECK_THROWS_AS(Lattice(3, {{0, 1}, {0, 2}}), InvalidArgument);                          // no top
  // two incomparable upper bounds of 1 and 2
  CHECK_THROWS_AS(Lattice(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}}),
                  InvalidArgument);
}

TEST_CASE("polygonality") {
  CHECK(is_polygonal(hexagon()));
  CHECK(is_polygonal(boolean3()));
  // chains of different length are allowed; the pentagon is the A2 Cambrian lattice
  CHECK(is_polygonal(pentagon()));
  CHECK_FALSE(is_polygonal(diamond3()));
  CHECK(polygon_of_interval(pentagon(), 0, 4).has_value());
  CHECK_FALSE(polygon_of_interval(diamond3(), 0, 4).has_value());
}

TEST_CASE("polygon enumeration") {
  CHECK(enumerate_polygons(hexagon()).polygons.size() == 1);
  auto cube = enumerate_polygons(boolean3());
  CHECK(cube.polygons.size() == 6);
  for (const auto& p : cube.polygons) CHECK(p.square());

  RootSystem rs(parse_system("A3"));
  Lattice L = WeakOrder(rs).to_lattice();
  std::size_t scan = 0;
  for (int x = 0; x < L.size(); ++x)
    for (int z = 0; z < L.size(); ++z) {
      // an interval is a polygon when it is the union of exactly two maximal chains
      // that share only the endpoints
      if (!L.leq(x, z) || x == z) continue;
      std::vector<std::vector<int>> chains;
      std::function<void(std::vector<int>&)> walk = [&](std::vector<int>& path) {
        if (path.back() == z) return chains.push_back(path);
        for (int y : L.up(path.back()))
          if (L.leq(y, z)) {
            path.push_back(y);
            walk(path);
            path.pop_back();
          }
      };
      std::vector<int> start{x};
      walk(start);
      if (chains.size() != 2) continue;
      std::set<int> a(chains[0].begin() + 1, chains[0].end() - 1);
      bool disjoint = std::none_of(chains[1].begin() + 1, chains[1].end() - 1,
                                   [&](int y) { return a.count(y); });
      int elements = 0;
      for (int y = 0; y < L.size(); ++y) elements += L.leq(x, y) && L.leq(y, z);
      if (disjoint && elements == static_cast<int>(chains[0].size() + chains[1].size() - 2)) ++scan;
    }
  CHECK(scan == enumerate_polygons(L).polygons.size());
}

TEST_CASE("forcing closure equals the smallest congruence") {
  for (const Lattice& L : {hexagon(), boolean3(), WeakOrder(RootSystem(parse_system("B2"))).to_lattice()}) {
    auto polys = enumerate_polygons(L);
    auto F = forcing_preorder(L, polys);
    for (int e = 0; e < L.num_edges(); ++e) {
      auto theta = congruence_from_edges(L, F, {e});
      CHECK(same_partition(theta.class_of, smallest_congruence(L, e)));
    }
  }
}

TEST_CASE("square forcing") {
  Lattice L = boolean3();
  auto F = forcing_preorder(L, enumerate_polygons(L));
  // edges in the same direction are forcing-equivalent, different directions are not
  for (int e = 0; e < L.num_edges(); ++e)
    for (int f = 0; f < L.num_edges(); ++f) {
      int de = L.edge(e).first ^ L.edge(e).second;
      int df = L.edge(f).first ^ L.edge(f).second;
      CHECK(F.equivalent(e, f) == (de == df));
      CHECK(static_cast<bool>(F.forces[e][f]) == (de == df));
    }
}

TEST_CASE("hexagon forcing: bottom edges force the middle side edges") {
  Lattice L = hexagon();
  auto polys = enumerate_polygons(L);
  const auto& p = polys.polygons.at(0);
  auto F = forcing_preorder(L, polys);
  int bl = L.edge_id(p.left[0], p.left[1]), br = L.edge_id(p.right[0], p.right[1]);
  int ml = L.edge_id(p.left[1], p.left[2]), mr = L.edge_id(p.right[1], p.right[2]);
  for (int e : {bl, br}) {
    CHECK(F.forces[e][ml]);
    CHECK(F.forces[e][mr]);
  }
  CHECK_FALSE(F.forces[ml][bl]);
  auto theta = congruence_from_edges(L, F, {ml});
  CHECK(theta.num_classes == 5);
  auto Q = quotient(L, theta);
  CHECK(Q.lattice.size() == 5);
  CHECK(is_polygonal(Q.lattice));
  CHECK(enumerate_polygons(Q.lattice).polygons.size() == 1);
}

TEST_CASE("trivial congruences") {
  Lattice L = hexagon();
  auto F = forcing_preorder(L, enumerate_polygons(L));
  auto id = congruence_from_edges(L, F, {});
  CHECK(id.num_classes == L.size());
  CHECK(quotient(L, id).lattice.size() == L.size());
  std::vector<int> all(L.num_edges());
  for (int e = 0; e < L.num_edges(); ++e) all[e] = e;
  auto full = congruence_from_edges(L, F, all);
  CHECK(full.num_classes == 1);
  CHECK(quotient(L, full).lattice.size() == 1);
}

TEST_CASE("partitions that are not congruences are rejected") {
  Lattice L = hexagon();
  std::vector<int> part(L.size());
  for (int x = 0; x < L.size(); ++x) part[x] = x;
  part[L.top()] = part[L.bottom()];
  CHECK_THROWS_AS(congruence_from_partition(L, part), VerificationFailure);
}

TEST_CASE("maximal chains and square classes") {
  Lattice cube = boolean3();
  auto chains = enumerate_chains(cube);
  CHECK(chains.size() == 6);
  auto sq = square_equivalence_classes(cube, enumerate_polygons(cube), chains);
  CHECK(sq.count == 1);
  CHECK(sq.polygon_connected);
  CHECK_THROWS_AS(enumerate_chains(cube, 5), GuardExceeded);
}

TEST_CASE("chain enumeration does not depend on the job count") {
  RootSystem rs(parse_system("A4"));
  Lattice L = WeakOrder(rs).to_lattice();
  auto one = enumerate_chains(L, kDefaultMaxChains, 1);
  auto many = enumerate_chains(L, kDefaultMaxChains, 8);
  CHECK(one.chains == many.chains);
  CHECK(one.size() == 768);
}

TEST_CASE("chain iterator walks every chain with a prefix once") {
  Lattice L = hexagon();
  ChainIterator it(L, {L.bottom()});
  MaxChain c;
  int n = 0;
  while (it.next(c)) {
    CHECK(c.front() == L.bottom());
    CHECK(c.back() == L.top());
    ++n;
  }
  CHECK(n == 2);
}
