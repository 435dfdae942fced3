#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coxchain/weak_order.hpp"

namespace coxchain {

struct CoxeterElement {
  CoxeterWord word;
  std::vector<Arc> orientation;  // (s, t) when s precedes t and m(s,t) > 2

  // "s1s2s3", one-based
  std::string label() const;
  // "1-2-3", for file names
  std::string slug() const;
};

CoxeterElement make_coxeter_element(const CoxeterSystem& sys, CoxeterWord word);
CoxeterElement linear_element(const CoxeterSystem& sys);
CoxeterElement bipartite_element(const CoxeterSystem& sys);
// "linear", "bipartite" or one-based comma separated letters such as "2,1,3".
CoxeterElement parse_coxeter_element(const CoxeterSystem& sys, std::string_view text);
// One word per orientation, the lexicographically smallest.
std::vector<CoxeterElement> all_coxeter_elements(const CoxeterSystem& sys);
CoxeterElement inverse_element(const CoxeterSystem& sys, const CoxeterElement& c);
bool same_element(const CoxeterElement& a, const CoxeterElement& b);
// The diagram is a path and c orients it as a directed path.
bool is_linear_orientation(const CoxeterSystem& sys, const CoxeterElement& c);

using GenMask = std::uint32_t;

struct SortingWord {
  CoxeterWord word;
  std::vector<GenMask> blocks;  // letters taken in each pass through c
  bool sortable() const;
};

// Lexicographically first reduced subword of c c c ... for w.
SortingWord c_sorting_word(const WeakOrder& wo, const CoxeterWord& c, ElemId w);
inline bool is_c_sortable(const WeakOrder& wo, const CoxeterWord& c, ElemId w) {
  return c_sorting_word(wo, c, w).sortable();
}

}  // namespace coxchain
