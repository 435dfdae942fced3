#include "coxchain/chain_orders.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "coxchain/error.hpp"
#include "coxchain/parallel.hpp"

namespace coxchain {

HeapPoset heap_poset(const RootSystem& rs, const std::vector<PosIdx>& seq) {
  if (!validate_admissible(rs, seq)) throw InvalidArgument("root sequence is not admissible");
  const int N = rs.size();
  HeapPoset h;
  h.above.assign(N, 0);
  for (int i = N - 1; i >= 0; --i) {
    PosIdx a = seq[i];
    for (int j = i + 1; j < N; ++j) {
      PosIdx b = seq[j];
      int sub = rs.subsystem_of(a, b);
      if (rs.subsystems()[sub].commutative) continue;
      h.above[a] |= root_bit(b) | h.above[b];
    }
  }
  for (PosIdx a = 0; a < N; ++a)
    if (h.above[a] & root_bit(a)) throw VerificationFailure("heap relation is not antisymmetric");
  return h;
}

Preorder heap_order(const HeapPoset& heap) {
  const int N = static_cast<int>(heap.above.size());
  std::vector<Arc> arcs;
  for (PosIdx a = 0; a < N; ++a)
    for (PosIdx b = 0; b < N; ++b)
      if (heap.less(a, b)) arcs.emplace_back(a, b);
  return Preorder(N, std::move(arcs));
}

ChainReference make_reference(const WeakOrder& wo, const CoxeterWord& word) {
  ChainReference ref;
  ref.word = word;
  ref.chain = wo.chain_of_word(word);
  ref.roots = root_sequence(wo, ref.chain);
  if (!validate_admissible(wo.roots(), ref.roots))
    throw VerificationFailure("root sequence of a reduced word is not admissible");
  ref.position.assign(ref.roots.size(), 0);
  for (std::size_t i = 0; i < ref.roots.size(); ++i) ref.position[ref.roots[i]] = static_cast<int>(i);
  ref.heap = heap_poset(wo.roots(), ref.roots);
  ref.order = heap_order(ref.heap);
  return ref;
}

Bits class_key(const RootSystem& rs, const ChainReference& ref, const std::vector<PosIdx>& seq) {
  std::vector<int> pos(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) pos[seq[i]] = static_cast<int>(i);
  Bits key(rs.noncommutative().size());
  for (std::size_t k = 0; k < rs.noncommutative().size(); ++k) {
    const auto& sub = rs.subsystems()[rs.noncommutative()[k]];
    PosIdx a = sub.roots[0], b = sub.roots[1];
    bool here = pos[a] < pos[b];
    bool there = ref.position[a] < ref.position[b];
    if (here != there) key.set(k);
  }
  return key;
}

MGPoset mg_poset_fast(const WeakOrder& wo, const ChainSet& chains, const ChainReference& ref,
                      int jobs) {
  const RootSystem& rs = wo.roots();
  const int n = static_cast<int>(chains.size());
  std::vector<Bits> keys(n);
  parallel_for(n, jobs, [&](std::size_t i) {
    auto seq = root_sequence(wo, chains.chains[i]);
    if (!validate_admissible(rs, seq))
      throw VerificationFailure("maximal chain with an inadmissible root sequence");
    keys[i] = class_key(rs, ref, seq);
  });

  struct KeyOrder {
    bool operator()(const Bits& a, const Bits& b) const {
      auto ca = a.count(), cb = b.count();
      if (ca != cb) return ca < cb;
      return bit_string(a) < bit_string(b);
    }
  };
  std::map<Bits, int, KeyOrder> first;
  for (int i = 0; i < n; ++i) first.emplace(keys[i], i);

  MGPoset mg;
  std::map<Bits, int, KeyOrder> class_of_key;
  for (auto& [key, rep] : first) {
    class_of_key.emplace(key, static_cast<int>(mg.classes.size()));
    mg.classes.push_back(ChainClass{key, rep});
  }
  mg.chain_class.resize(n);
  for (int i = 0; i < n; ++i) mg.chain_class[i] = class_of_key.at(keys[i]);
  for (std::size_t c = 0; c < mg.classes.size(); ++c) {
    const Bits& key = mg.classes[c].key;
    for (std::size_t b = 0; b < key.size(); ++b) {
      if (key[b]) continue;
      Bits bigger = key;
      bigger.set(b);
      auto it = class_of_key.find(bigger);
      if (it != class_of_key.end()) mg.moves.emplace_back(static_cast<int>(c), it->second);
    }
  }
  finish_mg(mg);
  return mg;
}

MGComparison compare_mg(const MGPoset& generic, const MGPoset& fast) {
  MGComparison out;
  const int k = static_cast<int>(generic.classes.size());
  if (generic.chain_class.size() != fast.chain_class.size()) {
    out.failures.push_back("posets were built over different chain sets");
    return out;
  }
  if (static_cast<int>(fast.classes.size()) != k)
    out.failures.push_back("class counts differ: " + std::to_string(k) + " vs " +
                           std::to_string(fast.classes.size()));
  out.generic_to_fast.assign(k, -1);
  std::vector<int> back(fast.classes.size(), -1);
  for (std::size_t i = 0; i < generic.chain_class.size(); ++i) {
    int g = generic.chain_class[i], f = fast.chain_class[i];
    if (out.generic_to_fast[g] < 0) out.generic_to_fast[g] = f;
    if (back[f] < 0) back[f] = g;
    if (out.generic_to_fast[g] != f || back[f] != g) {
      out.failures.push_back("chain " + std::to_string(i) + " splits the class correspondence");
      return out;
    }
  }
  if (!out.failures.empty()) return out;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (generic.order.leq(a, b) != fast.order.leq(out.generic_to_fast[a], out.generic_to_fast[b]))
        out.failures.push_back("orders differ on classes " + std::to_string(a) + ", " +
                               std::to_string(b));
  std::set<Arc> mapped;
  for (auto [a, b] : generic.moves) mapped.emplace(out.generic_to_fast[a], out.generic_to_fast[b]);
  std::set<Arc> fast_moves(fast.moves.begin(), fast.moves.end());
  if (mapped != fast_moves)
    out.failures.push_back("increasing polygon moves do not match single-subsystem covers");
  out.isomorphic = out.failures.empty();
  return out;
}

}  // namespace coxchain
