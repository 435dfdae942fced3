#include "coxchain/verify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "coxchain/error.hpp"
#include "coxchain/export.hpp"
#include "coxchain/parallel.hpp"

namespace coxchain {

namespace {

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

Report make(std::string name, bool experiment = false) {
  Report r;
  r.name = std::move(name);
  r.experiment = experiment;
  return r;
}

Report from_contraction(std::string name, const ContractionReport& c) {
  Report r = make(std::move(name));
  r.checked = c.checked;
  r.failures = c.failures;
  return r;
}

std::string tag(const std::string& base, const CoxeterElement& c) {
  return base + "[" + c.label() + "]";
}

void check_guard_classes(const Options& opt, std::size_t classes) {
  if (classes > opt.max_classes)
    throw GuardExceeded(std::to_string(classes) + " chain classes exceed the guard of " +
                        std::to_string(opt.max_classes));
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.ok(); });
}

std::uint64_t expected_positive_roots(const CoxeterSystem& sys) {
  const std::uint64_t n = sys.rank;
  switch (sys.type) {
    case CartanType::A: return n * (n + 1) / 2;
    case CartanType::B:
    case CartanType::C: return n * n;
    case CartanType::D: return n * (n - 1);
    case CartanType::F: return 24;
    case CartanType::G: return 6;
  }
  return 0;
}

std::uint64_t expected_catalan(const CoxeterSystem& sys) {
  const int n = sys.rank;
  switch (sys.type) {
    case CartanType::A: return binomial(2 * n + 2, n + 1) / (n + 2);
    case CartanType::B:
    case CartanType::C: return binomial(2 * n, n);
    case CartanType::D: return (3 * n - 2) * binomial(2 * n - 2, n - 1) / n;
    case CartanType::F: return 105;
    case CartanType::G: return 8;
  }
  return 0;
}

Workspace::Workspace(CoxeterSystem sys, Options opt) : opt_(opt) {
  if (opt_.jobs < 1 || opt_.max_chains == 0 || opt_.max_classes == 0)
    throw InvalidArgument("jobs and guards must be positive");
  rs_ = std::make_unique<RootSystem>(std::move(sys));
  wo_ = std::make_unique<WeakOrder>(*rs_);
  lattice_ = wo_->to_lattice();
}

const PolygonIndex& Workspace::polygons() {
  if (!polys_) polys_ = enumerate_polygons(lattice_);
  return *polys_;
}

const ChainSet& Workspace::chains() {
  if (!chains_) chains_ = enumerate_chains(lattice_, opt_.max_chains, opt_.jobs);
  return *chains_;
}

const std::vector<std::vector<std::pair<int, int>>>& Workspace::chain_moves() {
  if (!moves_) {
    const auto& cs = chains();
    const auto& ps = polygons();
    std::vector<std::vector<std::pair<int, int>>> m(cs.size());
    parallel_for(cs.size(), opt_.jobs, [&](std::size_t i) {
      for (auto& mv : polygon_move_neighbors(lattice_, ps, cs.chains[i]))
        m[i].emplace_back(cs.find(mv.result), mv.polygon);
    });
    moves_ = std::move(m);
  }
  return *moves_;
}

const SquareClasses& Workspace::squares() {
  if (!squares_) {
    squares_ = square_equivalence_classes(lattice_, polygons(), chains(), opt_.jobs);
    check_guard_classes(opt_, squares_->count);
  }
  return *squares_;
}

const CambrianData& Workspace::cambrian(const CoxeterElement& c) {
  auto& slot = cambrian_[c.slug()];
  if (!slot) slot = std::make_unique<CambrianData>(build_cambrian(*wo_, lattice_, c));
  return *slot;
}

const MGPoset& Workspace::generic_mg(const CoxeterElement& c) {
  auto it = generic_.find(c.slug());
  if (it == generic_.end()) {
    const auto& cd = cambrian(c);
    it = generic_
             .emplace(c.slug(), mg_preorder(lattice_, polygons(), chains(), squares(),
                                            cd.reference.order, opt_.jobs))
             .first;
  }
  return it->second;
}

const MGPoset& Workspace::fast_mg(const CoxeterElement& c) {
  auto it = fast_.find(c.slug());
  if (it == fast_.end()) {
    const auto& cd = cambrian(c);
    auto mg = mg_poset_fast(*wo_, chains(), cd.reference, opt_.jobs);
    check_guard_classes(opt_, mg.classes.size());
    it = fast_.emplace(c.slug(), std::move(mg)).first;
  }
  return it->second;
}

const CambrianChainMap& Workspace::chain_map(const CoxeterElement& c) {
  auto it = chain_map_.find(c.slug());
  if (it == chain_map_.end()) {
    const auto& cd = cambrian(c);
    const auto& dom = generic_mg(c);
    it = chain_map_
             .emplace(c.slug(), cambrian_chain_map(cd, chains(), dom, opt_.jobs, opt_.max_chains))
             .first;
  }
  return it->second;
}

namespace {

Report check_cartan(const CoxeterSystem& sys) {
  Report r = make("cartan.structure");
  const int n = sys.rank;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      std::string at = " at (" + std::to_string(s + 1) + "," + std::to_string(t + 1) + ")";
      int a = sys.cartan[s][t], b = sys.cartan[t][s];
      if (s == t) {
        r.expect(a == 2, "diagonal entry is not 2" + at);
        r.expect(sys.coxeter_orders[s][t] == 1, "m(s,s) is not 1" + at);
        continue;
      }
      r.expect(a <= 0, "positive off-diagonal entry" + at);
      r.expect((a == 0) == (b == 0), "zero pattern is not symmetric" + at);
      r.expect(sys.symmetrizer[s] * a == sys.symmetrizer[t] * b, "not symmetrizable" + at);
      r.expect(sys.coxeter_orders[s][t] == sys.coxeter_orders[t][s], "m table not symmetric" + at);
      static const int order_of[] = {2, 3, 4, 6};
      int p = a * b;
      r.expect(p >= 0 && p <= 3 && sys.coxeter_orders[s][t] == order_of[std::clamp(p, 0, 3)],
               "m(s,t) does not match the Cartan product" + at);
    }
  Rational lo = *std::min_element(sys.symmetrizer.begin(), sys.symmetrizer.end());
  r.expect(lo == Rational(1), "symmetrizer not normalized");
  return r;
}

Report check_forms(const CoxeterSystem& sys, std::uint64_t seed) {
  Report r = make("cartan.forms");
  const int n = sys.rank;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  auto random_vector = [&] {
    std::vector<Rational> v(n);
    for (auto& x : v) x = Rational(num(rng), den(rng));
    return v;
  };
  std::vector<std::vector<Rational>> vecs;
  for (int s = 0; s < n; ++s) {
    std::vector<Rational> e(n, 0);
    e[s] = 1;
    vecs.push_back(e);
  }
  for (int i = 0; i < 100; ++i) vecs.push_back(random_vector());
  for (const auto& c : all_coxeter_elements(sys)) {
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      const auto& x = vecs[i];
      const auto& y = vecs[(i * 7 + 3) % vecs.size()];
      r.expect(euler_form(sys, c.word, x, y) + euler_form(sys, c.word, y, x) ==
                   symmetric_form(sys, x, y),
               "Euler form does not symmetrize for " + c.label());
      r.expect(symmetric_form(sys, x, y) == symmetric_form(sys, y, x), "form not symmetric");
      r.expect(skew_form(sys, c.word, x, x) == Rational(0), "skew form not alternating");
    }
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        const auto& x = vecs[s];
        const auto& y = vecs[t];
        r.expect(euler_form(sys, c.word, x, y) + euler_form(sys, c.word, y, x) ==
                     symmetric_form(sys, x, y),
                 "Euler form does not symmetrize on basis vectors");
      }
  }
  return r;
}

Report check_roots(const RootSystem& rs) {
  Report r = make("roots.structure");
  const auto& sys = rs.system();
  r.expect(static_cast<std::uint64_t>(rs.size()) == expected_positive_roots(sys),
           "positive root count " + std::to_string(rs.size()) + " differs from the closed form " +
               std::to_string(expected_positive_roots(sys)));
  for (Gen s = 0; s < rs.rank(); ++s)
    for (PosIdx b = 0; b < rs.size(); ++b) {
      SignedRoot x = rs.reflect(s, b);
      r.expect(x.negative == (b == rs.simple(s)), "reflection sign wrong");
      if (!x.negative) r.expect(rs.reflect(s, x.index).index == b, "reflection is not an involution");
    }
  for (PosIdx a = 0; a < rs.size(); ++a)
    for (PosIdx b = 0; b < rs.size(); ++b) {
      if (a == b) continue;
      int id = rs.subsystem_of(a, b);
      r.expect(id >= 0, "pair without subsystem");
      int hits = 0;
      for (const auto& sub : rs.subsystems())
        if ((sub.mask & root_bit(a)) && (sub.mask & root_bit(b))) ++hits;
      r.expect(hits == 1, "pair of roots lies in " + std::to_string(hits) + " subsystems");
    }
  for (const auto& sub : rs.subsystems()) {
    bool orth = sub.roots.size() == 2 &&
                symmetric_form(sys, rs.coeffs(sub.roots[0]), rs.coeffs(sub.roots[1])) == Rational(0);
    r.expect(sub.commutative == orth, "commutativity flag wrong");
    // closed under the reflections in its own roots
    for (PosIdx b : sub.roots) {
      Rational bb = symmetric_form(sys, rs.coeffs(b), rs.coeffs(b));
      for (PosIdx g : sub.roots) {
        Rational k = 2 * symmetric_form(sys, rs.coeffs(g), rs.coeffs(b)) / bb;
        r.expect(k.denominator() == 1, "non-integral coroot pairing");
        std::vector<int> img = rs.coeffs(g);
        for (int t = 0; t < rs.rank(); ++t)
          img[t] -= static_cast<int>(k.numerator()) * rs.coeffs(b)[t];
        bool neg = std::all_of(img.begin(), img.end(), [](int v) { return v <= 0; });
        if (neg)
          for (int& v : img) v = -v;
        auto found = rs.find(img);
        r.expect(found && (sub.mask & root_bit(*found)), "subsystem not closed under reflections");
      }
    }
  }
  for (const auto& c : all_coxeter_elements(sys))
    for (int id : rs.noncommutative()) {
      auto ord = order_subsystem(rs, c.word, rs.subsystems()[id]);
      for (std::size_t i = 1; i + 1 < ord.size(); ++i)
        r.expect(rs.strictly_inside_cone(ord.front(), ord.back(), ord[i]),
                 "subsystem order for " + c.label() + " does not have simple ends");
    }
  return r;
}

Report check_weak_order(Workspace& ws) {
  Report r = make("weak.structure");
  const auto& wo = ws.weak_order();
  const auto& rs = ws.roots();
  const auto& L = ws.lattice();
  r.expect(static_cast<std::uint64_t>(wo.size()) == expected_group_order(rs.system()),
           "group order differs from the closed form");
  r.expect(wo.inv(wo.top()) == rs.all_mask(), "top is not w0");
  for (ElemId w = 0; w < wo.size(); ++w) {
    r.expect(wo.length(w) == std::popcount(wo.inv(w)), "length differs from inversion count");
    for (const auto& e : wo.up_edges(w)) {
      r.expect(wo.edge_label(w, e.target) == e.label, "edge label mismatch");
      r.expect(L.leq(w, e.target), "cover missing from the lattice");
    }
  }
  // lattice operations against the brute-force bound scan
  if (wo.size() <= 400) {
    for (ElemId a = 0; a < wo.size(); ++a)
      for (ElemId b = a; b < wo.size(); ++b) {
        r.expect(L.join(a, b) == wo.join(a, b), "join mismatch");
        r.expect(L.meet(a, b) == wo.meet(a, b), "meet mismatch");
      }
  } else {
    r.notes.push_back("join/meet cross-check skipped above 400 elements");
  }
  for (ElemId a = 0; a < wo.size(); ++a)
    for (ElemId b = 0; b < wo.size(); ++b)
      if (L.leq(a, b) != wo.leq(a, b)) {
        r.fail("order by inversion sets differs from the cover closure");
        a = wo.size();
        break;
      }
  if (auto v = polygonal_violation(L)) r.fail("weak order not polygonal: " + *v);
  ++r.checked;
  return r;
}

Report check_biclosed(const RootSystem& rs, const WeakOrder& wo) {
  Report r = make("weak.biclosed");
  if (rs.size() > 16) {
    r.notes.push_back("skipped: more than 16 positive roots");
    return r;
  }
  std::uint64_t count = 0;
  for (RootMask m = 0; m < (RootMask(1) << rs.size()); ++m) {
    bool bic = is_biclosed(rs, m);
    bool inv = wo.find(m).has_value();
    r.expect(bic == inv, "subset " + std::to_string(m) + (bic ? " is biclosed but not an inversion set"
                                                              : " is an inversion set but not biclosed"));
    count += bic;
  }
  r.expect(count == static_cast<std::uint64_t>(wo.size()), "biclosed count differs from |W|");
  return r;
}

Report check_chains(Workspace& ws) {
  Report r = make("weak.chains");
  const auto& L = ws.lattice();
  const auto& wo = ws.weak_order();
  const auto& rs = ws.roots();
  const auto& cs = ws.chains();
  // path count by dynamic programming over the ranked order
  std::vector<std::uint64_t> paths(L.size(), 0);
  paths[L.bottom()] = 1;
  for (ElemId w = 0; w < wo.size(); ++w)
    for (const auto& e : wo.up_edges(w)) paths[e.target] += paths[w];
  r.expect(paths[L.top()] == cs.size(), "chain enumeration count " + std::to_string(cs.size()) +
                                            " differs from path count " +
                                            std::to_string(paths[L.top()]));
  for (const auto& chain : cs.chains) {
    auto seq = root_sequence(wo, chain);
    r.expect(validate_admissible(rs, seq), "root sequence of a chain is not admissible");
    std::reverse(seq.begin(), seq.end());
    r.expect(validate_admissible(rs, seq), "reversed root sequence is not admissible");
  }
  return r;
}

Report check_polygons(Workspace& ws) {
  Report r = make("lattice.polygons");
  const auto& L = ws.lattice();
  const auto& rs = ws.roots();
  const auto& ps = ws.polygons();
  std::size_t scan = 0;
  for (int x = 0; x < L.size(); ++x)
    for (int z = 0; z < L.size(); ++z)
      if (polygon_of_interval(L, x, z)) ++scan;
  r.expect(scan == ps.polygons.size(), "polygon enumeration " + std::to_string(ps.polygons.size()) +
                                           " differs from the interval scan " + std::to_string(scan));
  for (const auto& p : ps.polygons) {
    auto labels = [&](const std::vector<int>& side) {
      RootMask m = 0;
      for (std::size_t i = 0; i + 1 < side.size(); ++i) m |= root_bit(L.label(L.edge_id(side[i], side[i + 1])));
      return m;
    };
    RootMask a = labels(p.left), b = labels(p.right);
    r.expect(a == b, "the two sides of a polygon carry different label sets");
    int first = std::countr_zero(a);
    int second = std::countr_zero(a & ~root_bit(first));
    const auto& sub = rs.subsystems()[rs.subsystem_of(first, second)];
    r.expect(sub.mask == a, "polygon labels are not a full rank-two subsystem");
    r.expect(sub.commutative == p.square(), "square polygons and commutative subsystems differ");
  }
  Forcing F = forcing_preorder(L, ps);
  if (auto v = forcing_consistency_violation(L, F)) r.fail("root labels not forcing-consistent: " + *v);
  ++r.checked;
  r.expect(ws.squares().polygon_connected, "chains not connected by polygon moves");
  return r;
}

Report check_heaps(Workspace& ws) {
  Report r = make("chains.heap-vs-square");
  const auto& cs = ws.chains();
  const auto& sq = ws.squares();
  std::map<std::vector<RootMask>, int> by_heap;
  std::vector<int> heap_class(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    auto h = heap_poset(ws.roots(), root_sequence(ws.weak_order(), cs.chains[i]));
    heap_class[i] = by_heap.emplace(h.above, static_cast<int>(by_heap.size())).first->second;
  }
  std::vector<int> sq_to_heap(sq.count, -1);
  std::vector<int> heap_to_sq(by_heap.size(), -1);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    int a = sq.class_of[i], b = heap_class[i];
    if (sq_to_heap[a] < 0) sq_to_heap[a] = b;
    if (heap_to_sq[b] < 0) heap_to_sq[b] = a;
    r.expect(sq_to_heap[a] == b && heap_to_sq[b] == a,
             "chain " + std::to_string(i) + ": heap classes and square classes differ");
  }
  return r;
}

Report check_labelling(Workspace& ws, const CoxeterElement& c) {
  Report r = make(tag("labelling.coxeter", c));
  const auto& cd = ws.cambrian(c);
  if (auto v = polygonal_labelling_violation(ws.lattice(), ws.polygons(), cd.reference.order))
    r.fail(*v);
  r.checked += ws.polygons().polygons.size();
  const auto& mg = ws.generic_mg(c);
  r.expect(mg.polygon_complete, "increasing polygon moves are not all covers");
  r.expect(mg.is_poset, "chain class order is not antisymmetric");
  return r;
}

Report check_generic_vs_fast(Workspace& ws, const CoxeterElement& c) {
  Report r = make(tag("mg.generic-vs-fast", c));
  auto cmp = compare_mg(ws.generic_mg(c), ws.fast_mg(c));
  r.checked = ws.generic_mg(c).classes.size();
  r.failures = cmp.failures;
  // key for the reference chain is empty; key for its reverse is full
  const auto& fast = ws.fast_mg(c);
  const auto& cd = ws.cambrian(c);
  r.expect(fast.classes[fast.chain_class[ws.chains().find(cd.reference.chain)]].key.none(),
           "reference chain has a non-empty key");
  auto rev = cd.reference.roots;
  std::reverse(rev.begin(), rev.end());
  r.expect(class_key(ws.roots(), cd.reference, rev).all(), "reversed reference key is not full");
  return r;
}

Report check_catalan(Workspace& ws, const CoxeterElement& c) {
  Report r = make(tag("cambrian.catalan", c));
  const auto& cd = ws.cambrian(c);
  auto expected = expected_catalan(ws.system());
  auto sortables = std::count(cd.sortable.begin(), cd.sortable.end(), 1);
  r.expect(static_cast<std::uint64_t>(cd.theta.num_classes) == expected,
           "quotient has " + std::to_string(cd.theta.num_classes) + " elements, expected " +
               std::to_string(expected));
  r.expect(static_cast<std::uint64_t>(sortables) == expected, "sortable count differs");
  for (ElemId w = 0; w < ws.weak_order().size(); ++w)
    r.expect(static_cast<bool>(cd.sortable[w]) == is_c_aligned(cd, w),
             "element " + std::to_string(w) + ": sortable and aligned disagree");
  return r;
}

Report check_commutation_invariance(Workspace& ws) {
  // words with the same orientation give the same Cambrian data
  Report r = make("cambrian.orientation");
  const auto& sys = ws.system();
  CoxeterWord w(sys.rank);
  std::iota(w.begin(), w.end(), 0);
  std::map<std::vector<Arc>, std::vector<char>> seen;
  do {
    auto c = make_coxeter_element(sys, w);
    std::vector<char> sortable(ws.weak_order().size());
    for (ElemId x = 0; x < ws.weak_order().size(); ++x)
      sortable[x] = is_c_sortable(ws.weak_order(), c.word, x);
    auto [it, fresh] = seen.emplace(c.orientation, sortable);
    r.expect(it->second == sortable, "words for " + c.label() + " disagree on sortables");
  } while (std::next_permutation(w.begin(), w.end()));
  return r;
}

Report check_fibre_moves(Workspace& ws, const CoxeterElement& c) {
  Report r = make(tag("quotient.fibre-moves", c));
  const auto& cm = ws.chain_map(c);
  const auto& moves = ws.chain_moves();
  const int n = static_cast<int>(ws.chains().size());
  UnionFind uf(n);
  std::set<Arc> realized;
  for (int i = 0; i < n; ++i)
    for (auto [j, p] : moves[i]) {
      if (cm.chain_map[i] == cm.chain_map[j]) uf.unite(i, j);
      realized.emplace(cm.chain_map[i], cm.chain_map[j]);
    }
  std::map<int, int> comp;
  for (int i = 0; i < n; ++i) {
    auto [it, fresh] = comp.emplace(cm.chain_map[i], uf.find(i));
    r.expect(it->second == uf.find(i),
             "fibre over quotient chain " + std::to_string(cm.chain_map[i]) + " is disconnected");
  }
  const auto& Q = ws.cambrian(c).quotient.lattice;
  const auto& qc = cm.quotient_chains;
  for (std::size_t a = 0; a < qc.size(); ++a)
    for (auto& mv : polygon_move_neighbors(Q, cm.quotient_polygons, qc.chains[a])) {
      int b = qc.find(mv.result);
      r.expect(realized.count({static_cast<int>(a), b}),
               "quotient move " + std::to_string(a) + " -> " + std::to_string(b) +
                   " has no preimage move");
    }
  return r;
}

Report check_polygon_preimages(Workspace& ws, const CoxeterElement& c) {
  Report r = make(tag("quotient.polygon-preimages", c));
  const auto& cd = ws.cambrian(c);
  const auto& cm = ws.chain_map(c);
  const auto& q = cd.quotient.q;
  std::set<std::pair<std::vector<int>, std::vector<int>>> images;
  for (const auto& p : ws.polygons().polygons) {
    auto a = chain_image(q, p.left), b = chain_image(q, p.right);
    images.emplace(a, b);
    images.emplace(b, a);
  }
  for (const auto& p : cm.quotient_polygons.polygons)
    r.expect(images.count({p.left, p.right}),
             "quotient polygon [" + std::to_string(p.min) + ", " + std::to_string(p.max) +
                 "] has no polygon preimage");
  return r;
}

Report check_collapse(Workspace& ws, const CoxeterElement& c) {
  Report r = make(tag("collapse.functorial", c));
  const auto& dom = ws.generic_mg(c);
  const auto& cm = ws.chain_map(c);
  Collapse cd = collapse(dom.order), cc = collapse(cm.codomain.order);
  auto f = collapse_map(cd, cc, cm.class_map);
  auto rep = check_contraction(cd.poset, cc.poset, f);
  r.checked = rep.checked;
  r.failures = rep.failures;
  r.expect(cd.poset.is_poset() && cc.poset.is_poset(), "collapse is not a poset");
  return r;
}

void add_cambrian_artifacts(Workspace& ws, const CoxeterElement& c, Artifacts& out) {
  const auto& cd = ws.cambrian(c);
  out["cambrian-" + c.slug() + ".json"] = dump(lattice_json(cd.quotient.lattice));
  out["cambrian-" + c.slug() + ".dot"] = lattice_dot(ws.lattice(), &cd.theta);
}

}  // namespace

SuiteResult run_gen(Workspace& ws) {
  SuiteResult out;
  out.artifacts["roots.json"] = dump(roots_json(ws.roots()));
  out.artifacts["weak-order.json"] = dump(lattice_json(ws.lattice()));
  out.artifacts["weak-order.dot"] = weak_order_dot(ws.weak_order());
  out.reports.push_back(check_roots(ws.roots()));
  return out;
}

SuiteResult run_mg(Workspace& ws, const CoxeterElement& c) {
  SuiteResult out;
  out.reports.push_back(check_generic_vs_fast(ws, c));
  out.artifacts["mg-" + c.slug() + ".json"] = dump(mg_json(ws.fast_mg(c), ws.chains()));
  return out;
}

SuiteResult run_cambrian_quotient(Workspace& ws, const CoxeterElement& c) {
  SuiteResult out;
  out.reports.push_back(check_catalan(ws, c));
  add_cambrian_artifacts(ws, c, out.artifacts);
  return out;
}

SuiteResult run_cambrian_cstable(Workspace& ws, const CoxeterElement& c) {
  SuiteResult out;
  auto rep = verify_cstable(ws.cambrian(c));
  rep.hard.name = tag("cstable.criterion", c);
  rep.equivalence.name = tag("cstable.equivalence", c);
  Json j;
  j["criterion"] = report_json(rep.hard);
  j["equivalence"] = report_json(rep.equivalence);
  j["simply_laced"] = ws.system().simply_laced();
  out.artifacts["cstable-" + c.slug() + ".json"] = dump(j);
  out.reports.push_back(std::move(rep.hard));
  out.reports.push_back(std::move(rep.equivalence));
  return out;
}

SuiteResult run_cambrian_chain_map(Workspace& ws, const CoxeterElement& c) {
  SuiteResult out;
  const auto& cd = ws.cambrian(c);
  const auto& cm = ws.chain_map(c);
  out.reports.push_back(from_contraction(tag("contraction", c), cm.contraction));
  Report structure = cm.structure;
  structure.name = tag("chain-map.extrema", c);
  out.reports.push_back(structure);
  Report stability = cm.stability;
  stability.name = tag("chain-map.stable-sequences", c);
  out.reports.push_back(stability);
  Report fibres = cm.fibres;
  fibres.name = tag("chain-map.fibre-intervals", c);
  out.reports.push_back(fibres);
  auto asc = check_ascending_uncontracted(cd, ws.polygons());
  asc.name = tag("cambrian.ascending-uncontracted", c);
  out.reports.push_back(asc);
  auto qp = check_quotient_polygons(cd, cm.quotient_polygons);
  qp.name = tag("cambrian.quotient-polygons", c);
  out.reports.push_back(qp);

  Json j;
  j["domain"] = mg_json(ws.generic_mg(c), ws.chains());
  j["codomain"] = mg_json(cm.codomain, cm.quotient_chains);
  j["class_map"] = cm.class_map;
  j["contraction"] = contraction_json(cm.contraction);
  j["minimum"] = cm.minimum_class;
  j["inverse_sorting_class"] = cm.inverse_class;
  out.artifacts["chain-map-" + c.slug() + ".json"] = dump(j);
  return out;
}

SuiteResult run_bruhat_build(int n, const Options& opt) {
  SuiteResult out;
  auto b2 = build_B_n_2(n, opt.jobs);
  Workspace ws(build_system(CartanType::A, n), opt);
  auto c = linear_element(ws.system());
  auto rep = check_second_bruhat(b2, ws.weak_order(), ws.chains(), ws.fast_mg(c));
  rep.name = "bruhat.B(" + std::to_string(n) + ",2)";
  out.reports.push_back(rep);
  auto b1 = build_B_n_1(n);
  auto rep1 = check_first_bruhat(b1, ws.weak_order());
  rep1.name = "bruhat.B(" + std::to_string(n) + ",1)";
  out.reports.push_back(rep1);
  Report inc = make("bruhat.inclusion-order", true);
  inc.notes.push_back(std::string("single-step order equals inclusion: ") +
                      (b2.inclusion_order_equal ? "yes" : "no"));
  out.reports.push_back(inc);
  out.artifacts["bruhat-" + std::to_string(n) + "-2.json"] = dump(bruhat_json(b2));
  return out;
}

SuiteResult run_bruhat_map_f(int n, const Options& opt) {
  SuiteResult out;
  auto res = map_f(n, opt.jobs);
  res.square.name = "map-f.square[" + std::to_string(n) + "]";
  res.contraction.name = "map-f.contraction[" + std::to_string(n) + "]";
  res.fibres.name = "map-f.fibre-intervals[" + std::to_string(n) + "]";
  Json j;
  j["n"] = n;
  j["domain_classes"] = res.domain_classes;
  j["codomain_classes"] = res.codomain_classes;
  j["square"] = report_json(res.square);
  j["contraction"] = report_json(res.contraction);
  j["fibres"] = report_json(res.fibres);
  out.artifacts["map-f-" + std::to_string(n) + ".json"] = dump(j);
  out.reports.push_back(std::move(res.square));
  out.reports.push_back(std::move(res.contraction));
  out.reports.push_back(std::move(res.fibres));
  return out;
}

SuiteResult run_bruhat_rhbo(Workspace& ws, const CoxeterWord& reference) {
  SuiteResult out;
  auto res = rhbo_experiment(ws.weak_order(), ws.lattice(), ws.polygons(), ws.chains(),
                             ws.squares(), reference, ws.options().jobs);
  Json j = report_json(res.report);
  j["minima"] = res.minima;
  j["maxima"] = res.maxima;
  j["is_poset"] = res.is_poset;
  j["polygon_complete"] = res.polygon_complete;
  j["inclusion_equal"] = res.inclusion_equal;
  j["from_sorting_word"] = res.from_sorting_word;
  out.artifacts["rhbo.json"] = dump(j);
  out.reports.push_back(std::move(res.report));
  return out;
}

SuiteResult run_verify_all(Workspace& ws) {
  SuiteResult out;
  auto absorb = [&](SuiteResult&& part) {
    for (auto& r : part.reports) out.reports.push_back(std::move(r));
    for (auto& [k, v] : part.artifacts) out.artifacts[k] = std::move(v);
  };
  const auto& sys = ws.system();
  out.reports.push_back(check_cartan(sys));
  out.reports.push_back(check_forms(sys, ws.options().seed));
  absorb(run_gen(ws));
  out.reports.push_back(check_weak_order(ws));
  out.reports.push_back(check_biclosed(ws.roots(), ws.weak_order()));
  out.reports.push_back(check_chains(ws));
  out.reports.push_back(check_polygons(ws));
  out.reports.push_back(check_heaps(ws));
  out.reports.push_back(check_commutation_invariance(ws));

  std::vector<std::size_t> catalan;
  for (const auto& c : all_coxeter_elements(sys)) {
    absorb(run_cambrian_quotient(ws, c));
    catalan.push_back(ws.cambrian(c).theta.num_classes);
    out.reports.push_back(check_labelling(ws, c));
    absorb(run_mg(ws, c));
    absorb(run_cambrian_cstable(ws, c));
    absorb(run_cambrian_chain_map(ws, c));
    out.reports.push_back(check_fibre_moves(ws, c));
    out.reports.push_back(check_polygon_preimages(ws, c));
    out.reports.push_back(check_collapse(ws, c));
  }
  Report constant = make("cambrian.catalan-constant");
  constant.expect(std::adjacent_find(catalan.begin(), catalan.end(), std::not_equal_to<>()) ==
                      catalan.end(),
                  "quotient size depends on the Coxeter element");
  out.reports.push_back(constant);

  if (sys.type == CartanType::A && sys.rank >= 2 && sys.rank <= 5) {
    Report words = make("bruhat.reduced-words");
    auto ws_words = reduced_words_of_longest(sys.rank, ws.options().max_chains, ws.options().jobs);
    int comm = 0;
    commutation_classes(ws_words, &comm);
    words.expect(ws_words.size() == ws.chains().size(),
                 "reduced words " + std::to_string(ws_words.size()) + " vs chains " +
                     std::to_string(ws.chains().size()));
    words.expect(comm == ws.squares().count, "commutation classes " + std::to_string(comm) +
                                                 " vs square classes " +
                                                 std::to_string(ws.squares().count));
    out.reports.push_back(words);
    absorb(run_bruhat_build(sys.rank, ws.options()));
    if (sys.rank <= 4) absorb(run_bruhat_map_f(sys.rank, ws.options()));
  }

  Json summary = Json::array();
  for (const auto& r : out.reports) {
    Json o;
    o["name"] = r.name;
    o["status"] = r.experiment ? "experiment" : (r.ok() ? "pass" : "fail");
    o["checked"] = r.checked;
    o["failures"] = r.failures;
    if (!r.notes.empty()) o["notes"] = r.notes;
    summary.push_back(o);
  }
  Json top;
  top["type"] = sys.name();
  top["passed"] = out.passed();
  top["reports"] = summary;
  out.artifacts["summary.json"] = dump(top);
  return out;
}

std::vector<std::string> experiment_names() {
  return {"cstable", "maxima", "fibres", "inclusion", "rhbo-search"};
}

SuiteResult run_experiment(Workspace& ws, std::string_view name) {
  SuiteResult out;
  const auto& sys = ws.system();
  Json j = Json::object();
  if (name == "cstable") {
    for (const auto& c : all_coxeter_elements(sys)) {
      auto rep = verify_cstable(ws.cambrian(c));
      rep.equivalence.name = tag("experiment.cstable", c);
      rep.equivalence.experiment = true;
      j[c.label()] = report_json(rep.equivalence);
      out.reports.push_back(std::move(rep.equivalence));
    }
  } else if (name == "maxima") {
    for (const auto& c : all_coxeter_elements(sys)) {
      const auto& cm = ws.chain_map(c);
      Report r = make(tag("experiment.maxima", c), true);
      r.checked = cm.codomain.classes.size();
      r.notes.push_back("maxima: " + std::to_string(cm.codomain.maxima.size()));
      Json o;
      o["maxima"] = cm.codomain.maxima;
      o["inverse_sorting_class"] = cm.inverse_class;
      j[c.label()] = o;
      out.reports.push_back(std::move(r));
    }
  } else if (name == "fibres") {
    for (const auto& c : all_coxeter_elements(sys)) {
      Report r = ws.chain_map(c).fibres;
      r.name = tag("experiment.fibres", c);
      j[c.label()] = report_json(r);
      out.reports.push_back(std::move(r));
    }
  } else if (name == "inclusion") {
    for (const auto& c : all_coxeter_elements(sys)) {
      const auto& mg = ws.fast_mg(c);
      Report r = make(tag("experiment.inclusion", c), true);
      bool equal = true;
      for (std::size_t a = 0; a < mg.classes.size(); ++a)
        for (std::size_t b = 0; b < mg.classes.size(); ++b)
          if (mg.classes[a].key.is_subset_of(mg.classes[b].key) !=
              mg.order.leq(static_cast<int>(a), static_cast<int>(b)))
            equal = false;
      r.checked = mg.classes.size();
      r.notes.push_back(std::string("inclusion order: ") + (equal ? "equal" : "differs"));
      r.notes.push_back("minima: " + std::to_string(mg.minima.size()) +
                        ", maxima: " + std::to_string(mg.maxima.size()));
      Json o;
      o["inclusion_equal"] = equal;
      o["minima"] = mg.minima.size();
      o["maxima"] = mg.maxima.size();
      j[c.label()] = o;
      out.reports.push_back(std::move(r));
    }
  } else if (name == "rhbo-search") {
    // one reference per square class of reduced words of w0
    const auto& sq = ws.squares();
    Report r = make("experiment.rhbo-search", true);
    Json found = Json::array();
    for (int k = 0; k < sq.count; ++k) {
      auto word = ws.weak_order().word_of_chain(ws.chains().chains[sq.representative[k]]);
      auto res = rhbo_experiment(ws.weak_order(), ws.lattice(), ws.polygons(), ws.chains(), sq,
                                 word, ws.options().jobs);
      ++r.checked;
      for (auto& f : res.report.failures) r.fail(f);
      if (res.minima != 1 || res.maxima != 1 || !res.is_poset) {
        CoxeterWord one_based = word;
        for (int& x : one_based) ++x;
        Json o;
        o["word"] = one_based;
        o["minima"] = res.minima;
        o["maxima"] = res.maxima;
        o["is_poset"] = res.is_poset;
        o["from_sorting_word"] = res.from_sorting_word;
        found.push_back(o);
      }
    }
    r.notes.push_back("references with several extrema: " + std::to_string(found.size()));
    j["references"] = sq.count;
    j["several_extrema"] = found;
    out.reports.push_back(std::move(r));
  } else {
    throw InvalidArgument("unknown experiment '" + std::string(name) + "'");
  }
  out.artifacts["experiment-" + std::string(name) + ".json"] = dump(j);
  return out;
}

std::string summary_text(const SuiteResult& r) {
  std::ostringstream os;
  for (const auto& rep : r.reports) {
    const char* status = rep.experiment ? "INFO" : (rep.ok() ? "PASS" : "FAIL");
    os << status << "  " << rep.name << "  checked=" << rep.checked;
    if (!rep.failures.empty()) os << " failures=" << rep.failures.size();
    for (const auto& n : rep.notes) os << "  [" << n << "]";
    os << "\n";
    if (!rep.experiment)
      for (std::size_t i = 0; i < rep.failures.size() && i < 5; ++i)
        os << "      " << rep.failures[i] << "\n";
  }
  return os.str();
}

}  // namespace coxchain
