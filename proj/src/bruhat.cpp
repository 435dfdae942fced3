#include "coxchain/bruhat.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <unordered_map>

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
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct KeyOrder {
  bool operator()(const Bits& a, const Bits& b) const {
    auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return bit_string(a) < bit_string(b);
  }
};

void extend_words(Perm& p, CoxeterWord& word, std::size_t target, std::vector<CoxeterWord>& out,
                  std::atomic<std::size_t>& total, std::size_t max_words) {
  if (word.size() == target) {
    if (++total > max_words)
      throw GuardExceeded("more than " + std::to_string(max_words) + " reduced words");
    out.push_back(word);
    return;
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] > p[i + 1]) continue;
    std::swap(p[i], p[i + 1]);
    word.push_back(static_cast<int>(i));
    extend_words(p, word, target, out, total, max_words);
    word.pop_back();
    std::swap(p[i], p[i + 1]);
  }
}

void check_n(int n, int lo, int hi) {
  if (n < lo || n > hi)
    throw InvalidArgument("n must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "], got " + std::to_string(n));
}

// Node-based insertion; the tree is only ever serialized.
struct Node {
  int value;
  std::unique_ptr<Node> left, right;
};

void insert(std::unique_ptr<Node>& root, int v) {
  if (!root) {
    root = std::make_unique<Node>(Node{v, nullptr, nullptr});
    return;
  }
  insert(v < root->value ? root->left : root->right, v);
}

void serialize(const std::unique_ptr<Node>& root, std::string& out) {
  if (!root) {
    out += '.';
    return;
  }
  out += '(';
  serialize(root->left, out);
  out += std::to_string(root->value);
  serialize(root->right, out);
  out += ')';
}

}  // namespace

std::vector<CoxeterWord> reduced_words_of_longest(int n, std::size_t max_words, int jobs) {
  check_n(n, 1, 6);
  const std::size_t target = static_cast<std::size_t>(n) * (n + 1) / 2;
  std::vector<std::vector<CoxeterWord>> parts(n);
  std::atomic<std::size_t> total{0};
  parallel_for(n, jobs, [&](std::size_t first) {
    Perm p(n + 1);
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[first], p[first + 1]);
    CoxeterWord word{static_cast<int>(first)};
    extend_words(p, word, target, parts[first], total, max_words);
  });
  std::vector<CoxeterWord> out;
  for (auto& part : parts)
    for (auto& w : part) out.push_back(std::move(w));
  return out;
}

std::vector<int> commutation_classes(const std::vector<CoxeterWord>& words, int* count) {
  std::unordered_map<CoxeterWord, int, ChainHash> index;
  index.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], static_cast<int>(i));
  UnionFind uf(static_cast<int>(words.size()));
  for (std::size_t i = 0; i < words.size(); ++i) {
    CoxeterWord w = words[i];
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (std::abs(w[p] - w[p + 1]) < 2) continue;
      std::swap(w[p], w[p + 1]);
      auto it = index.find(w);
      if (it == index.end()) throw VerificationFailure("commutation move left the word set");
      uf.unite(static_cast<int>(i), it->second);
      std::swap(w[p], w[p + 1]);
    }
  }
  std::vector<int> out(words.size());
  std::map<int, int> renumber;
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto [it, fresh] = renumber.emplace(uf.find(static_cast<int>(i)), static_cast<int>(renumber.size()));
    out[i] = it->second;
  }
  *count = static_cast<int>(renumber.size());
  return out;
}

int triple_count(int n) { return (n + 1) * n * (n - 1) / 6; }

int triple_index(int n, int i, int j, int k) {
  int idx = 0;
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        if (a == i && b == j && c == k) return idx;
        ++idx;
      }
  throw InvalidArgument("not a triple of {0.." + std::to_string(n) + "}");
}

Bits triple_key(int n, const CoxeterWord& word) {
  Perm p(n + 1);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> cross(n + 1, std::vector<int>(n + 1, -1));
  for (std::size_t t = 0; t < word.size(); ++t) {
    int i = word[t];
    if (i < 0 || i >= n || p[i] > p[i + 1]) throw InvalidArgument("word is not reduced");
    cross[p[i]][p[i + 1]] = static_cast<int>(t);
    std::swap(p[i], p[i + 1]);
  }
  Bits key(std::max(triple_count(n), 0));
  int idx = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k, ++idx) {
        int ij = cross[i][j], ik = cross[i][k], jk = cross[j][k];
        if (ij < 0 || ik < 0 || jk < 0) throw InvalidArgument("word does not reach the longest element");
        bool lex = ij < ik && ik < jk;
        bool rev = jk < ik && ik < ij;
        if (!lex && !rev) throw VerificationFailure("wiring diagram crosses a triple out of order");
        if (rev) key.set(idx);
      }
  return key;
}

HigherBruhat build_B_n_2(int n, int jobs) {
  check_n(n, 2, 5);
  HigherBruhat b;
  b.n = n;
  auto words = reduced_words_of_longest(n, 10'000'000, jobs);
  b.word_count = words.size();
  int comm_count = 0;
  auto comm = commutation_classes(words, &comm_count);
  std::vector<Bits> keys(words.size());
  parallel_for(words.size(), jobs, [&](std::size_t i) { keys[i] = triple_key(n, words[i]); });

  std::map<Bits, int, KeyOrder> first;
  for (std::size_t i = 0; i < words.size(); ++i) first.emplace(keys[i], static_cast<int>(i));
  std::map<Bits, int, KeyOrder> class_of;
  for (auto& [key, w] : first) {
    class_of.emplace(key, static_cast<int>(b.classes.size()));
    b.classes.push_back(CommutationClass{key, words[w]});
  }
  // keys and commutation classes must induce the same partition
  b.keys_match_commutation = static_cast<int>(b.classes.size()) == comm_count;
  std::vector<int> comm_to_key(comm_count, -1);
  for (std::size_t i = 0; i < words.size() && b.keys_match_commutation; ++i) {
    int k = class_of.at(keys[i]);
    if (comm_to_key[comm[i]] < 0) comm_to_key[comm[i]] = k;
    if (comm_to_key[comm[i]] != k) b.keys_match_commutation = false;
  }

  for (std::size_t a = 0; a < b.classes.size(); ++a) {
    const Bits& key = b.classes[a].triples;
    for (std::size_t t = 0; t < key.size(); ++t) {
      if (key[t]) continue;
      Bits bigger = key;
      bigger.set(t);
      auto it = class_of.find(bigger);
      if (it != class_of.end()) b.covers.emplace_back(static_cast<int>(a), it->second);
    }
  }
  b.order = Preorder(static_cast<int>(b.classes.size()), b.covers);
  b.inclusion_order_equal = true;
  for (std::size_t a = 0; a < b.classes.size(); ++a)
    for (std::size_t c = 0; c < b.classes.size(); ++c)
      if (b.classes[a].triples.is_subset_of(b.classes[c].triples) !=
          b.order.leq(static_cast<int>(a), static_cast<int>(c)))
        b.inclusion_order_equal = false;
  return b;
}

FirstBruhat build_B_n_1(int n) {
  check_n(n, 1, 6);
  FirstBruhat b;
  b.n = n;
  Perm id(n + 1);
  std::iota(id.begin(), id.end(), 0);
  std::map<Perm, int> index{{id, 0}};
  b.perms.push_back(id);
  std::vector<Arc> covers;
  for (std::size_t head = 0; head < b.perms.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      Perm p = b.perms[head];
      if (p[i] > p[i + 1]) continue;
      std::swap(p[i], p[i + 1]);
      auto [it, fresh] = index.emplace(p, static_cast<int>(b.perms.size()));
      if (fresh) b.perms.push_back(p);
      covers.emplace_back(static_cast<int>(head), it->second);
    }
  }
  b.lattice = Lattice(static_cast<int>(b.perms.size()), std::move(covers));
  return b;
}

std::vector<std::pair<int, int>> inverted_pairs(const Perm& p) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = x + 1; y < p.size(); ++y)
      if (p[x] > p[y]) out.emplace_back(p[y], p[x]);
  std::sort(out.begin(), out.end());
  return out;
}

std::string tamari_tree(const Perm& p) {
  std::unique_ptr<Node> root;
  for (auto it = p.rbegin(); it != p.rend(); ++it) insert(root, *it);
  std::string out;
  serialize(root, out);
  return out;
}

PosIdx root_of_pair(const RootSystem& rs, int a, int b) {
  if (rs.system().type != CartanType::A || a < 0 || a >= b || b > rs.rank())
    throw InvalidArgument("pair dictionary needs type A and 0 <= a < b <= rank");
  std::vector<int> coeffs(rs.rank(), 0);
  for (int t = a; t < b; ++t) coeffs[t] = 1;
  auto r = rs.find(coeffs);
  if (!r) throw VerificationFailure("e_a - e_b is missing from the root system");
  return *r;
}

int subsystem_of_triple(const RootSystem& rs, int i, int j, int k) {
  return rs.subsystem_of(root_of_pair(rs, i, j), root_of_pair(rs, j, k));
}

Report check_first_bruhat(const FirstBruhat& b1, const WeakOrder& wo,
                          std::vector<ElemId>* perm_to_elem) {
  Report r;
  r.name = "first-higher-bruhat";
  const RootSystem& rs = wo.roots();
  std::vector<ElemId> map(b1.perms.size(), -1);
  std::vector<char> used(wo.size(), 0);
  r.expect(static_cast<int>(b1.perms.size()) == wo.size(), "sizes differ");
  for (std::size_t i = 0; i < b1.perms.size(); ++i) {
    RootMask m = 0;
    for (auto [a, b] : inverted_pairs(b1.perms[i])) m |= root_bit(root_of_pair(rs, a, b));
    auto w = wo.find(m);
    r.expect(w.has_value(), "permutation " + std::to_string(i) + " has no weak order element");
    if (!w) continue;
    r.expect(!used[*w], "two permutations share element " + std::to_string(*w));
    used[*w] = 1;
    map[i] = *w;
  }
  std::size_t weak_covers = 0;
  for (ElemId w = 0; w < wo.size(); ++w) weak_covers += wo.up_edges(w).size();
  r.expect(weak_covers == b1.lattice.covers().size(), "cover counts differ");
  for (auto [x, y] : b1.lattice.covers()) {
    if (map[x] < 0 || map[y] < 0) continue;
    RootMask diff = wo.inv(map[y]) & ~wo.inv(map[x]);
    r.expect(wo.leq(map[x], map[y]) && std::popcount(diff) == 1,
             "cover " + std::to_string(x) + "<" + std::to_string(y) + " is not a weak order cover");
  }
  if (perm_to_elem) *perm_to_elem = std::move(map);
  return r;
}

Report check_second_bruhat(const HigherBruhat& b2, const WeakOrder& wo, const ChainSet& chains,
                           const MGPoset& fast) {
  Report r;
  r.name = "second-higher-bruhat";
  const RootSystem& rs = wo.roots();
  const int n = b2.n;
  r.expect(b2.keys_match_commutation, "triple keys do not separate commutation classes");
  std::vector<int> triple_bit;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        int bit = rs.key_bit(subsystem_of_triple(rs, i, j, k));
        r.expect(bit >= 0, "triple maps to a commutative subsystem");
        triple_bit.push_back(bit);
      }
  r.expect(triple_bit.size() == rs.noncommutative().size(),
           "triples and non-commutative subsystems differ in number");
  if (!r.failures.empty()) return r;

  std::map<Bits, int> fast_of_key;
  for (std::size_t c = 0; c < fast.classes.size(); ++c) fast_of_key.emplace(fast.classes[c].key, static_cast<int>(c));
  r.expect(b2.classes.size() == fast.classes.size(), "class counts differ");
  std::vector<int> m(b2.classes.size(), -1);
  std::set<int> used;
  for (std::size_t a = 0; a < b2.classes.size(); ++a) {
    Bits key(rs.noncommutative().size());
    for (std::size_t t = 0; t < triple_bit.size(); ++t)
      if (b2.classes[a].triples[t]) key.set(triple_bit[t]);
    auto it = fast_of_key.find(key);
    r.expect(it != fast_of_key.end(), "triple key of class " + std::to_string(a) + " is not realized");
    if (it == fast_of_key.end()) continue;
    m[a] = it->second;
    r.expect(used.insert(m[a]).second, "dictionary is not injective");
    int chain = chains.find(wo.chain_of_word(b2.classes[a].representative));
    r.expect(chain >= 0 && fast.chain_class[chain] == m[a],
             "representative word of class " + std::to_string(a) + " lands in another class");
  }
  if (!r.failures.empty()) return r;
  std::set<Arc> mapped;
  for (auto [a, b] : b2.covers) mapped.emplace(m[a], m[b]);
  std::set<Arc> target(fast.moves.begin(), fast.moves.end());
  r.expect(mapped == target, "cover relations differ under the dictionary");
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b)
      r.expect(b2.order.leq(static_cast<int>(a), static_cast<int>(b)) == fast.order.leq(m[a], m[b]),
               "orders differ on " + std::to_string(a) + ", " + std::to_string(b));
  return r;
}

MapFResult map_f(int n, int jobs) {
  check_n(n, 2, 5);
  MapFResult out;
  out.square.name = "map-f-square";
  out.contraction.name = "map-f-contraction";
  out.fibres.name = "map-f-fibres";
  out.fibres.experiment = true;

  RootSystem rs(build_system(CartanType::A, n));
  WeakOrder wo(rs);
  Lattice L = wo.to_lattice();
  PolygonIndex polys = enumerate_polygons(L);
  ChainSet chains = enumerate_chains(L, kDefaultMaxChains, jobs);
  SquareClasses squares = square_equivalence_classes(L, polys, chains, jobs);
  CambrianData cd = build_cambrian(wo, L, linear_element(rs.system()));
  MGPoset domain = mg_preorder(L, polys, chains, squares, cd.reference.order, jobs);
  CambrianChainMap cm = cambrian_chain_map(cd, chains, domain, jobs);

  // g: permutations to binary trees, compared with the Cambrian classes
  FirstBruhat b1 = build_B_n_1(n);
  std::vector<ElemId> perm_to_elem;
  Report iso = check_first_bruhat(b1, wo, &perm_to_elem);
  for (auto& f : iso.failures) out.square.fail(f);
  std::map<std::string, int> class_of_tree;
  std::map<Perm, std::string> tree_of_perm;
  for (std::size_t i = 0; i < b1.perms.size(); ++i) {
    std::string t = tamari_tree(b1.perms[i]);
    tree_of_perm[b1.perms[i]] = t;
    int k = cd.theta.class_of[perm_to_elem[i]];
    auto [it, fresh] = class_of_tree.emplace(t, k);
    out.square.expect(it->second == k, "tree " + t + " meets two Cambrian classes");
  }
  out.square.expect(static_cast<int>(class_of_tree.size()) == cd.theta.num_classes,
                    "trees and Cambrian classes differ in number");

  // f on every reduced word: trees along the wiring diagram versus q_c
  HigherBruhat b2 = build_B_n_2(n, jobs);
  auto words = reduced_words_of_longest(n, kDefaultMaxChains, jobs);
  std::map<Bits, int> b2_class;
  for (std::size_t a = 0; a < b2.classes.size(); ++a) b2_class.emplace(b2.classes[a].triples, static_cast<int>(a));
  std::vector<int> f(b2.classes.size(), -1);
  for (const auto& word : words) {
    Perm p(n + 1);
    std::iota(p.begin(), p.end(), 0);
    MaxChain tree_chain{cd.theta.class_of[perm_to_elem[0]]};
    for (int i : word) {
      std::swap(p[i], p[i + 1]);
      int k = class_of_tree.at(tree_of_perm.at(p));
      if (tree_chain.back() != k) tree_chain.push_back(k);
    }
    int qchain = cm.quotient_chains.find(tree_chain);
    out.square.expect(qchain >= 0, "tree sequence is not a maximal chain of the quotient");
    if (qchain < 0) continue;
    int via_trees = cm.codomain.chain_class[qchain];
    int chain = chains.find(wo.chain_of_word(word));
    int via_cambrian = cm.class_map[domain.chain_class[chain]];
    out.square.expect(via_trees == via_cambrian, "tree map and Cambrian chain map disagree");
    int a = b2_class.at(triple_key(n, word));
    if (f[a] < 0) f[a] = via_trees;
    out.square.expect(f[a] == via_trees, "f is not constant on a commutation class");
  }
  out.domain_classes = static_cast<int>(b2.classes.size());
  out.codomain_classes = static_cast<int>(cm.codomain.classes.size());
  if (!out.square.failures.empty()) return out;

  ContractionReport cr = check_contraction(b2.order, cm.codomain.order, f);
  out.contraction.checked = cr.checked;
  out.contraction.failures = cr.failures;
  out.contraction.notes.push_back(std::to_string(out.domain_classes) + " -> " +
                                  std::to_string(out.codomain_classes) + " classes");

  std::vector<std::vector<int>> fibre(out.codomain_classes);
  for (std::size_t a = 0; a < f.size(); ++a) fibre[f[a]].push_back(static_cast<int>(a));
  int bad = 0;
  for (std::size_t y = 0; y < fibre.size(); ++y) {
    if (is_interval(b2.order, fibre[y])) {
      ++out.fibres.checked;
      continue;
    }
    ++bad;
    std::string members;
    for (int a : fibre[y]) members += (members.empty() ? "" : ",") + std::to_string(a);
    out.fibres.expect(false, "fibre over " + std::to_string(y) + " = {" + members + "} is not an interval");
  }
  out.fibres.notes.push_back("non-interval fibres: " + std::to_string(bad));
  return out;
}

RhboResult rhbo_experiment(const WeakOrder& wo, const Lattice& L, const PolygonIndex& polys,
                           const ChainSet& chains, const SquareClasses& squares,
                           const CoxeterWord& reference_word, int jobs) {
  RhboResult out;
  out.report.name = "rhbo";
  out.report.experiment = true;
  ChainReference ref = make_reference(wo, reference_word);
  MGPoset generic = mg_preorder(L, polys, chains, squares, ref.order, jobs);
  MGPoset fast = mg_poset_fast(wo, chains, ref, jobs);
  MGComparison cmp = compare_mg(generic, fast);
  for (auto& f : cmp.failures) out.report.fail("key construction disagrees: " + f);
  out.minima = static_cast<int>(generic.minima.size());
  out.maxima = static_cast<int>(generic.maxima.size());
  out.is_poset = generic.is_poset;
  out.polygon_complete = generic.polygon_complete;
  out.inclusion_equal = true;
  for (std::size_t a = 0; a < fast.classes.size(); ++a)
    for (std::size_t b = 0; b < fast.classes.size(); ++b)
      if (fast.classes[a].key.is_subset_of(fast.classes[b].key) !=
          fast.order.leq(static_cast<int>(a), static_cast<int>(b)))
        out.inclusion_equal = false;
  for (const auto& c : all_coxeter_elements(wo.roots().system())) {
    auto word = c_sorting_word(wo, c.word, wo.top()).word;
    if (heap_poset(wo.roots(), root_sequence(wo, wo.chain_of_word(word))) == ref.heap)
      out.from_sorting_word = true;
  }
  out.report.checked = generic.classes.size();
  out.report.notes.push_back("classes: " + std::to_string(generic.classes.size()));
  out.report.notes.push_back("minima: " + std::to_string(out.minima));
  out.report.notes.push_back("maxima: " + std::to_string(out.maxima));
  out.report.notes.push_back(std::string("poset: ") + (out.is_poset ? "yes" : "no"));
  out.report.notes.push_back(std::string("polygon-complete: ") + (out.polygon_complete ? "yes" : "no"));
  out.report.notes.push_back(std::string("inclusion order: ") + (out.inclusion_equal ? "equal" : "differs"));
  out.report.notes.push_back(std::string("c-sorting reference: ") + (out.from_sorting_word ? "yes" : "no"));
  return out;
}

}  // namespace coxchain
