#include "coxchain/coxeter_element.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "coxchain/error.hpp"

namespace coxchain {

std::string CoxeterElement::label() const {
  std::string out;
  for (Gen s : word) out += "s" + std::to_string(s + 1);
  return out;
}

std::string CoxeterElement::slug() const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += "-";
    out += std::to_string(word[i] + 1);
  }
  return out;
}

CoxeterElement make_coxeter_element(const CoxeterSystem& sys, CoxeterWord word) {
  if (!is_coxeter_word(sys, word))
    throw InvalidArgument("a Coxeter element uses every generator of " + sys.name() +
                          " exactly once");
  CoxeterElement c;
  c.word = std::move(word);
  std::vector<int> pos(sys.rank);
  for (int i = 0; i < sys.rank; ++i) pos[c.word[i]] = i;
  for (Gen s = 0; s < sys.rank; ++s)
    for (Gen t = s + 1; t < sys.rank; ++t)
      if (sys.coxeter_orders[s][t] > 2)
        c.orientation.push_back(pos[s] < pos[t] ? Arc{s, t} : Arc{t, s});
  std::sort(c.orientation.begin(), c.orientation.end());
  return c;
}

CoxeterElement linear_element(const CoxeterSystem& sys) {
  CoxeterWord w(sys.rank);
  std::iota(w.begin(), w.end(), 0);
  return make_coxeter_element(sys, w);
}

CoxeterElement bipartite_element(const CoxeterSystem& sys) {
  // two-colour the diagram (a tree) starting from generator 0
  std::vector<int> colour(sys.rank, -1);
  colour[0] = 0;
  std::vector<Gen> stack{0};
  while (!stack.empty()) {
    Gen s = stack.back();
    stack.pop_back();
    for (Gen t = 0; t < sys.rank; ++t)
      if (t != s && sys.coxeter_orders[s][t] > 2 && colour[t] < 0) {
        colour[t] = 1 - colour[s];
        stack.push_back(t);
      }
  }
  CoxeterWord w;
  for (int want : {1, 0})
    for (Gen s = 0; s < sys.rank; ++s)
      if (colour[s] == want) w.push_back(s);
  return make_coxeter_element(sys, w);
}

CoxeterElement parse_coxeter_element(const CoxeterSystem& sys, std::string_view text) {
  if (text == "linear") return linear_element(sys);
  if (text == "bipartite") return bipartite_element(sys);
  CoxeterWord w;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto piece = text.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty())
      throw InvalidArgument("bad Coxeter element '" + std::string(text) + "'");
    w.push_back(v - 1);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return make_coxeter_element(sys, w);
}

std::vector<CoxeterElement> all_coxeter_elements(const CoxeterSystem& sys) {
  CoxeterWord w(sys.rank);
  std::iota(w.begin(), w.end(), 0);
  std::vector<CoxeterElement> out;
  do {
    auto c = make_coxeter_element(sys, w);
    bool seen = std::any_of(out.begin(), out.end(),
                            [&](const CoxeterElement& d) { return same_element(c, d); });
    if (!seen) out.push_back(std::move(c));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

CoxeterElement inverse_element(const CoxeterSystem& sys, const CoxeterElement& c) {
  return make_coxeter_element(sys, CoxeterWord(c.word.rbegin(), c.word.rend()));
}

bool same_element(const CoxeterElement& a, const CoxeterElement& b) {
  return a.orientation == b.orientation;
}

bool is_linear_orientation(const CoxeterSystem& sys, const CoxeterElement& c) {
  if (sys.type != CartanType::A) return false;
  auto up = linear_element(sys);
  auto down = inverse_element(sys, up);
  return same_element(c, up) || same_element(c, down);
}

bool SortingWord::sortable() const {
  for (std::size_t i = 1; i < blocks.size(); ++i)
    if ((blocks[i] & ~blocks[i - 1]) != 0) return false;
  return true;
}

SortingWord c_sorting_word(const WeakOrder& wo, const CoxeterWord& c, ElemId w) {
  const int rank = wo.roots().rank();
  if (!is_coxeter_word(wo.roots().system(), c)) throw InvalidArgument("not a Coxeter word");
  const std::size_t limit = static_cast<std::size_t>(wo.length(wo.top())) * rank + rank;
  SortingWord out;
  ElemId v = w;
  std::size_t scanned = 0;
  while (v != wo.bottom()) {
    GenMask block = 0;
    for (Gen s : c) {
      if (++scanned > limit) throw VerificationFailure("c-sorting scan exceeded its depth bound");
      if (wo.has_left_descent(v, s)) {
        out.word.push_back(s);
        block |= GenMask(1) << s;
        v = wo.left_multiply(s, v);
      }
    }
    if (block == 0) throw VerificationFailure("a pass through c removed no letter");
    out.blocks.push_back(block);
  }
  return out;
}

}  // namespace coxchain
