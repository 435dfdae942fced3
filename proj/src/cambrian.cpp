#include "coxchain/cambrian.hpp"

#include <algorithm>
#include <map>

#include "coxchain/error.hpp"
#include "coxchain/parallel.hpp"

namespace coxchain {

namespace {

std::string edge_text(const Lattice& L, int e) {
  return std::to_string(L.edge(e).first) + "<" + std::to_string(L.edge(e).second);
}

}  // namespace

ElemId pi_down_recursive(const WeakOrder& wo, const CoxeterWord& c, ElemId w) {
  if (c.empty() || w == wo.bottom()) return wo.bottom();
  Gen s = c.front();
  if (wo.has_left_descent(w, s)) {
    CoxeterWord rotated(c.begin() + 1, c.end());
    rotated.push_back(s);
    ElemId u = pi_down_recursive(wo, rotated, wo.left_multiply(s, w));
    if (wo.has_left_descent(u, s)) throw VerificationFailure("pi_down recursion lost a descent");
    return wo.left_multiply(s, u);
  }
  CoxeterWord rest(c.begin() + 1, c.end());
  auto parabolic = wo.find(wo.inv(w) & wo.roots().off_support_mask(s));
  if (!parabolic) throw VerificationFailure("parabolic component is missing from the weak order");
  return pi_down_recursive(wo, rest, *parabolic);
}

CambrianData build_cambrian(const WeakOrder& wo, const Lattice& weak, const CoxeterElement& c) {
  const RootSystem& rs = wo.roots();
  const int n = wo.size();
  CambrianData cd;
  cd.wo = &wo;
  cd.weak = &weak;
  cd.c = c;
  cd.sorting.resize(n);
  cd.sortable.assign(n, 0);
  std::vector<ElemId> sortables;
  for (ElemId w = 0; w < n; ++w) {
    cd.sorting[w] = c_sorting_word(wo, c.word, w);
    cd.sortable[w] = cd.sorting[w].sortable();
    if (cd.sortable[w]) sortables.push_back(w);
  }

  cd.pi_down.assign(n, -1);
  for (ElemId w = 0; w < n; ++w) {
    ElemId best = -1;
    for (ElemId u : sortables)
      if (wo.leq(u, w) && (best < 0 || wo.length(u) > wo.length(best))) best = u;
    for (ElemId u : sortables)
      if (wo.leq(u, w) && !wo.leq(u, best))
        throw VerificationFailure("no maximum c-sortable element below " + std::to_string(w));
    cd.pi_down[w] = best;
    ElemId rec = pi_down_recursive(wo, c.word, w);
    if (rec != best)
      throw VerificationFailure("pi_down recursion disagrees with the definition at " +
                                std::to_string(w));
  }
  for (auto [lo, hi] : weak.covers())
    if (!wo.leq(cd.pi_down[lo], cd.pi_down[hi]))
      throw VerificationFailure("pi_down is not order preserving");

  cd.theta = congruence_from_partition(weak, cd.pi_down);
  cd.quotient = quotient(weak, cd.theta);
  cd.quotient.lattice.set_labels(quotient_edge_labels(weak, cd.theta, cd.quotient), rs.size());

  if (static_cast<int>(sortables.size()) != cd.theta.num_classes)
    throw VerificationFailure("sortables do not biject with congruence classes");
  for (ElemId u : sortables) {
    if (cd.pi_down[u] != u) throw VerificationFailure("a sortable element is not fixed by pi_down");
    for (ElemId x : cd.theta.members[cd.theta.class_of[u]])
      if (!wo.leq(u, x)) throw VerificationFailure("sortable element is not the bottom of its class");
  }
  for (ElemId u : sortables)
    for (ElemId v : sortables)
      if (wo.leq(u, v) !=
          cd.quotient.lattice.leq(cd.theta.class_of[u], cd.theta.class_of[v]))
        throw VerificationFailure("quotient is not isomorphic to the sortable subposet");

  if (!cd.sortable[wo.top()]) throw VerificationFailure("w0 is not c-sortable");
  cd.reference = make_reference(wo, cd.sorting[wo.top()].word);
  auto cinv = inverse_element(rs.system(), c);
  cd.inverse_reference = make_reference(wo, c_sorting_word(wo, cinv.word, wo.top()).word);

  for (int id : rs.noncommutative()) {
    auto ord = order_subsystem(rs, c.word, rs.subsystems()[id]);
    for (std::size_t i = 0; i + 1 < ord.size(); ++i)
      if (!cd.reference.heap.less(ord[i], ord[i + 1]))
        throw VerificationFailure("skew-form order disagrees with the c-sorting heap");
    cd.subsystem_order.push_back(std::move(ord));
  }
  return cd;
}

bool is_c_aligned(const CambrianData& cd, ElemId w, int key_bit) {
  const auto& ord = cd.subsystem_order[key_bit];
  RootMask inv = cd.wo->inv(w);
  std::size_t count = 0;
  for (PosIdx b : ord)
    if (inv & root_bit(b)) ++count;
  if (count == 0) return true;
  if (count == 1 && (inv & root_bit(ord.back()))) return true;
  for (std::size_t i = 0; i < count; ++i)
    if (!(inv & root_bit(ord[i]))) return false;
  return true;
}

bool is_c_aligned(const CambrianData& cd, ElemId w) {
  for (std::size_t k = 0; k < cd.subsystem_order.size(); ++k)
    if (!is_c_aligned(cd, w, static_cast<int>(k))) return false;
  return true;
}

bool is_c_stable_edge(const CambrianData& cd, int edge) {
  const RootSystem& rs = cd.wo->roots();
  int upper = cd.weak->edge(edge).second;
  PosIdx beta = cd.weak->label(edge);
  for (int id : rs.subsystems_containing(beta)) {
    int bit = rs.key_bit(id);
    if (bit >= 0 && !is_c_aligned(cd, upper, bit)) return false;
  }
  return true;
}

CStableReport verify_cstable(const CambrianData& cd) {
  const Lattice& L = *cd.weak;
  const bool simply_laced = cd.wo->roots().system().simply_laced();
  CStableReport r;
  r.hard.name = "cstable-criterion";
  r.equivalence.name = "cstable-equivalence";
  r.equivalence.experiment = !simply_laced;
  for (int e = 0; e < L.num_edges(); ++e) {
    int upper = L.edge(e).second;
    PosIdx beta = L.label(e);
    bool contracted = cd.theta.contracts(L, e);
    bool stable = is_c_stable_edge(cd, e);
    bool outside = !(cd.wo->inv(cd.pi_down[upper]) & root_bit(beta));
    std::string where = "edge " + edge_text(L, e) + " label " + std::to_string(beta);
    r.hard.expect(contracted == outside, where + ": contraction does not match pi_down criterion");
    r.hard.expect(outside || stable, where + ": label in inv(pi_down) but edge not c-stable");
    r.equivalence.expect(contracted != stable,
                         where + (contracted ? ": contracted and c-stable"
                                             : ": not contracted and not c-stable"));
  }
  return r;
}

std::vector<PosIdx> stable_sequence(const CambrianData& cd, const MaxChain& chain) {
  const Lattice& L = *cd.weak;
  std::vector<PosIdx> out;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    int e = L.edge_id(chain[i], chain[i + 1]);
    if (e < 0) throw InvalidArgument("not a chain of covers");
    if (is_c_stable_edge(cd, e)) out.push_back(L.label(e));
  }
  return out;
}

CambrianChainMap cambrian_chain_map(const CambrianData& cd, const ChainSet& chains,
                                    const MGPoset& domain, int jobs, std::size_t max_chains) {
  const Lattice& Q = cd.quotient.lattice;
  const auto& q = cd.quotient.q;
  const bool simply_laced = cd.wo->roots().system().simply_laced();
  CambrianChainMap out;
  out.structure.name = "chain-map-structure";
  out.stability.name = "stable-sequences";
  out.stability.experiment = !simply_laced;
  out.fibres.name = "fibre-intervals";
  out.fibres.experiment = true;

  out.quotient_polygons = enumerate_polygons(Q);
  out.quotient_chains = enumerate_chains(Q, max_chains, jobs);
  out.quotient_squares =
      square_equivalence_classes(Q, out.quotient_polygons, out.quotient_chains, jobs);
  out.codomain = mg_preorder(Q, out.quotient_polygons, out.quotient_chains,
                             out.quotient_squares, cd.reference.order, jobs);

  const int n = static_cast<int>(chains.size());
  out.chain_map.assign(n, -1);
  std::vector<std::vector<PosIdx>> stable(n);
  parallel_for(n, jobs, [&](std::size_t i) {
    out.chain_map[i] = out.quotient_chains.find(chain_image(q, chains.chains[i]));
    stable[i] = stable_sequence(cd, chains.chains[i]);
  });
  std::vector<char> hit(out.quotient_chains.size(), 0);
  for (int i = 0; i < n; ++i) {
    out.structure.expect(out.chain_map[i] >= 0,
                         "image of chain " + std::to_string(i) + " is not maximal");
    if (out.chain_map[i] >= 0) hit[out.chain_map[i]] = 1;
  }
  for (std::size_t j = 0; j < hit.size(); ++j)
    out.structure.expect(hit[j], "quotient chain " + std::to_string(j) + " has no preimage");
  if (!out.structure.failures.empty()) return out;

  out.class_map.assign(domain.classes.size(), -1);
  for (int i = 0; i < n; ++i) {
    int a = domain.chain_class[i];
    int b = out.codomain.chain_class[out.chain_map[i]];
    if (out.class_map[a] < 0) out.class_map[a] = b;
    out.structure.expect(out.class_map[a] == b,
                         "class " + std::to_string(a) + " has images in two classes");
  }
  out.structure.expect(out.codomain.is_poset, "quotient chain order is not antisymmetric");
  out.contraction = check_contraction(domain.order, out.codomain.order, out.class_map);

  auto class_of_image = [&](const MaxChain& c) {
    int j = out.quotient_chains.find(chain_image(q, c));
    return j < 0 ? -1 : out.codomain.chain_class[j];
  };
  out.minimum_class = class_of_image(cd.reference.chain);
  out.inverse_class = class_of_image(cd.inverse_reference.chain);
  out.structure.expect(out.codomain.minima == std::vector<int>{out.minimum_class},
                       "minimum is not unique or is not the class of w0(c)");
  const auto& mx = out.codomain.maxima;
  out.structure.expect(std::find(mx.begin(), mx.end(), out.inverse_class) != mx.end(),
                       "class of w0(c^-1) is not maximal");
  if (is_linear_orientation(cd.wo->roots().system(), cd.c))
    out.structure.expect(mx.size() == 1, "linear orientation but several maxima");
  out.structure.notes.push_back("maxima: " + std::to_string(mx.size()));

  std::map<std::vector<PosIdx>, int> by_stable;
  std::map<int, int> by_image;
  for (int i = 0; i < n; ++i) {
    auto labels = chain_labels(Q, out.quotient_chains.chains[out.chain_map[i]]);
    out.stability.expect(labels == stable[i],
                         "chain " + std::to_string(i) + ": stable labels differ from its image");
    auto [it1, fresh1] = by_stable.emplace(stable[i], i);
    auto [it2, fresh2] = by_image.emplace(out.chain_map[i], i);
    out.stability.expect(fresh1 == fresh2 && it1->second == it2->second,
                         "chain " + std::to_string(i) +
                             ": equal images and equal stable sequences disagree");
  }

  std::vector<std::vector<int>> fibre(out.codomain.classes.size());
  for (std::size_t a = 0; a < out.class_map.size(); ++a) fibre[out.class_map[a]].push_back(static_cast<int>(a));
  int non_interval = 0;
  for (std::size_t b = 0; b < fibre.size(); ++b)
    if (!is_interval(domain.order, fibre[b])) {
      ++non_interval;
      out.fibres.expect(false, "fibre over class " + std::to_string(b) + " is not an interval");
    } else {
      ++out.fibres.checked;
    }
  out.fibres.notes.push_back("non-interval fibres: " + std::to_string(non_interval));
  return out;
}

Report check_ascending_uncontracted(const CambrianData& cd, const PolygonIndex& weak_polygons) {
  const Lattice& L = *cd.weak;
  Report r;
  r.name = "ascending-uncontracted";
  for (const auto& p : weak_polygons.polygons) {
    if (p.square()) continue;
    int bl = L.edge_id(p.left[0], p.left[1]);
    int br = L.edge_id(p.right[0], p.right[1]);
    if (cd.theta.contracts(L, bl) || cd.theta.contracts(L, br)) continue;
    const auto& side = left_side_ascends(L, p, cd.reference.order) ? p.left : p.right;
    for (std::size_t i = 0; i + 1 < side.size(); ++i) {
      int e = L.edge_id(side[i], side[i + 1]);
      r.expect(!cd.theta.contracts(L, e), "polygon [" + std::to_string(p.min) + ", " +
                                               std::to_string(p.max) +
                                               "]: ascending edge " + edge_text(L, e) +
                                               " contracted");
    }
  }
  return r;
}

Report check_quotient_polygons(const CambrianData& cd, const PolygonIndex& quotient_polygons) {
  const Lattice& Q = cd.quotient.lattice;
  Report r;
  r.name = "quotient-polygons";
  for (const auto& p : quotient_polygons.polygons) {
    if (p.square()) continue;
    bool found = false;
    for (const auto* side : {&p.left, &p.right}) {
      if (side->size() != 3) continue;
      int a = Q.label(Q.edge_id((*side)[0], (*side)[1]));
      int b = Q.label(Q.edge_id((*side)[1], (*side)[2]));
      if (cd.reference.order.less(b, a)) found = true;
    }
    r.expect(found, "quotient polygon [" + std::to_string(p.min) + ", " + std::to_string(p.max) +
                        "] has no descending side of length two");
  }
  return r;
}

}  // namespace coxchain
