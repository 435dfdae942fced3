#pragma once

#include <string>
#include <vector>

#include "coxchain/lattice.hpp"
#include "coxchain/weak_order.hpp"

namespace coxchain {

struct HeapPoset {
  std::vector<RootMask> above;  // strict: above[a] holds every b with a < b
  bool less(PosIdx a, PosIdx b) const { return (above[a] >> b) & 1; }
  bool operator==(const HeapPoset&) const = default;
};

HeapPoset heap_poset(const RootSystem& rs, const std::vector<PosIdx>& seq);
Preorder heap_order(const HeapPoset& heap);

// Everything derived from one reduced word of w0 used as reference.
struct ChainReference {
  CoxeterWord word;
  MaxChain chain;
  std::vector<PosIdx> roots;
  std::vector<int> position;  // position[root] in roots
  HeapPoset heap;
  Preorder order;
};

ChainReference make_reference(const WeakOrder& wo, const CoxeterWord& word);

// Bit k set iff non-commutative subsystem k is ordered oppositely by seq and
// by the reference.
Bits class_key(const RootSystem& rs, const ChainReference& ref, const std::vector<PosIdx>& seq);

// Classes keyed by inverted subsystems; covers add one subsystem, both keys
// realized by some chain in `chains`.
MGPoset mg_poset_fast(const WeakOrder& wo, const ChainSet& chains, const ChainReference& ref,
                      int jobs = 1);

struct MGComparison {
  bool isomorphic = false;
  std::vector<int> generic_to_fast;
  std::vector<std::string> failures;
};

// Both posets must be built over the same chain set.
MGComparison compare_mg(const MGPoset& generic, const MGPoset& fast);

}  // namespace coxchain
