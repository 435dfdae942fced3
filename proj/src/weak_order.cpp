#include "coxchain/weak_order.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <tuple>

#include "coxchain/error.hpp"

namespace coxchain {

std::uint64_t expected_group_order(const CoxeterSystem& sys) {
  auto factorial = [](int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  const int n = sys.rank;
  switch (sys.type) {
    case CartanType::A: return factorial(n + 1);
    case CartanType::B:
    case CartanType::C: return (std::uint64_t(1) << n) * factorial(n);
    case CartanType::D: return (std::uint64_t(1) << (n - 1)) * factorial(n);
    case CartanType::F: return 1152;
    case CartanType::G: return 12;
  }
  return 0;
}

WeakOrder::WeakOrder(const RootSystem& rs) : rs_(&rs) {
  const int n = rs.rank();
  const int N = rs.size();
  const std::uint64_t expected = expected_group_order(rs.system());

  std::vector<SignedRoot> identity(N);
  for (PosIdx i = 0; i < N; ++i) identity[i] = SignedRoot{i, false};
  elements_.push_back(WOElement{0, 0, 0});
  action_.push_back(identity);
  by_inv_[0] = 0;

  // BFS by length; each element is expanded once, so every cover is found
  // exactly once from its lower end.
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    ElemId w = static_cast<ElemId>(head);
    for (Gen s = 0; s < n; ++s) {
      SignedRoot img = action_[w][rs.simple(s)];
      if (img.negative) continue;
      RootMask next_inv = elements_[w].inv | root_bit(img.index);
      auto it = by_inv_.find(next_inv);
      ElemId target;
      if (it == by_inv_.end()) {
        target = static_cast<ElemId>(elements_.size());
        if (static_cast<std::uint64_t>(target) >= expected)
          throw VerificationFailure("weak order exceeded the group order of " +
                                    rs.system().name());
        elements_.push_back(WOElement{target, next_inv, elements_[w].length + 1});
        std::vector<SignedRoot> act(N);
        for (PosIdx b = 0; b < N; ++b) {
          SignedRoot sb = rs.reflect(s, b);
          SignedRoot wb = action_[w][sb.index];
          act[b] = SignedRoot{wb.index, wb.negative != sb.negative};
        }
        action_.push_back(std::move(act));
        by_inv_[next_inv] = target;
      } else {
        target = it->second;
      }
      if (up_.size() < elements_.size()) up_.resize(elements_.size());
      up_[w].push_back(WOEdge{img.index, target});
    }
  }
  if (elements_.size() != expected)
    throw VerificationFailure("weak order of " + rs.system().name() + " has " +
                              std::to_string(elements_.size()) + " elements, expected " +
                              std::to_string(expected));
  up_.resize(elements_.size());
  down_.assign(elements_.size(), {});
  for (ElemId w = 0; w < size(); ++w) {
    std::sort(up_[w].begin(), up_[w].end(),
              [](const WOEdge& a, const WOEdge& b) { return a.label < b.label; });
    for (const auto& e : up_[w]) down_[e.target].push_back(WOEdge{e.label, w});
  }
  for (auto& d : down_)
    std::sort(d.begin(), d.end(), [](const WOEdge& a, const WOEdge& b) { return a.label < b.label; });

  right_.assign(elements_.size(), std::vector<ElemId>(n, -1));
  for (ElemId w = 0; w < size(); ++w)
    for (Gen s = 0; s < n; ++s) {
      SignedRoot img = action_[w][rs.simple(s)];
      RootMask m = img.negative ? (inv(w) & ~root_bit(img.index)) : (inv(w) | root_bit(img.index));
      right_[w][s] = by_inv_.at(m);
    }
  top_ = by_inv_.at(rs.all_mask());
}

std::optional<ElemId> WeakOrder::find(RootMask m) const {
  auto it = by_inv_.find(m);
  if (it == by_inv_.end()) return std::nullopt;
  return it->second;
}

PosIdx WeakOrder::edge_label(ElemId v, ElemId w) const {
  RootMask diff = inv(w) & ~inv(v);
  if (!leq(v, w) || std::popcount(diff) != 1)
    throw InvalidArgument("edge_label: " + std::to_string(v) + " is not covered by " +
                          std::to_string(w));
  return std::countr_zero(diff);
}

ElemId WeakOrder::join(ElemId x, ElemId y) const {
  RootMask need = inv(x) | inv(y);
  ElemId best = -1;
  for (const auto& e : elements_)
    if ((need & ~e.inv) == 0 && (best < 0 || e.length < length(best))) best = e.id;
  for (const auto& e : elements_)
    if ((need & ~e.inv) == 0 && !leq(best, e.id))
      throw VerificationFailure("no least upper bound in the weak order");
  return best;
}

ElemId WeakOrder::meet(ElemId x, ElemId y) const {
  ElemId best = -1;
  for (const auto& e : elements_)
    if (leq(e.id, x) && leq(e.id, y) && (best < 0 || e.length > length(best))) best = e.id;
  for (const auto& e : elements_)
    if (leq(e.id, x) && leq(e.id, y) && !leq(e.id, best))
      throw VerificationFailure("no greatest lower bound in the weak order");
  return best;
}

ElemId WeakOrder::left_multiply(Gen s, ElemId w) const {
  const RootSystem& rs = *rs_;
  PosIdx as = rs.simple(s);
  RootMask m = 0;
  for (PosIdx g = 0; g < rs.size(); ++g) {
    if (g == as) continue;
    if (inv(w) & root_bit(rs.reflect(s, g).index)) m |= root_bit(g);
  }
  if (!(inv(w) & root_bit(as))) m |= root_bit(as);
  auto id = find(m);
  if (!id) throw VerificationFailure("left multiplication left the group");
  return *id;
}

ElemId WeakOrder::evaluate_reduced(const CoxeterWord& word) const {
  validate_word(rs_->system(), word);
  ElemId w = bottom();
  for (Gen s : word) {
    ElemId next = right_[w][s];
    if (length(next) != length(w) + 1) throw InvalidArgument("word is not reduced");
    w = next;
  }
  return w;
}

MaxChain WeakOrder::chain_of_word(const CoxeterWord& word) const {
  validate_word(rs_->system(), word);
  MaxChain chain{bottom()};
  for (Gen s : word) {
    ElemId next = right_[chain.back()][s];
    if (length(next) != length(chain.back()) + 1) throw InvalidArgument("word is not reduced");
    chain.push_back(next);
  }
  if (chain.back() != top()) throw InvalidArgument("word is not a reduced word for w0");
  return chain;
}

CoxeterWord WeakOrder::word_of_chain(const MaxChain& chain) const {
  CoxeterWord word;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    Gen found = -1;
    for (Gen s = 0; s < rs_->rank(); ++s)
      if (right_[chain[i]][s] == chain[i + 1] && length(chain[i + 1]) == length(chain[i]) + 1)
        found = s;
    if (found < 0) throw InvalidArgument("not a chain of covers");
    word.push_back(found);
  }
  return word;
}

Lattice WeakOrder::to_lattice() const {
  std::vector<std::tuple<int, int, int>> edges;
  for (ElemId w = 0; w < size(); ++w)
    for (const auto& e : up_[w]) edges.emplace_back(w, e.target, e.label);
  std::sort(edges.begin(), edges.end());
  std::vector<Arc> covers;
  std::vector<int> labels;
  for (auto [lo, hi, lab] : edges) {
    covers.emplace_back(lo, hi);
    labels.push_back(lab);
  }
  Lattice L(size(), std::move(covers));
  L.set_labels(std::move(labels), rs_->size());
  return L;
}

std::vector<PosIdx> root_sequence(const WeakOrder& wo, const MaxChain& chain) {
  if (chain.empty() || chain.front() != wo.bottom() || chain.back() != wo.top() ||
      static_cast<int>(chain.size()) != wo.roots().size() + 1)
    throw InvalidArgument("root_sequence needs a maximal chain from e to w0");
  std::vector<PosIdx> seq;
  seq.reserve(chain.size() - 1);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) seq.push_back(wo.edge_label(chain[i], chain[i + 1]));
  return seq;
}

bool validate_admissible(const RootSystem& rs, const std::vector<PosIdx>& seq) {
  const int N = rs.size();
  if (static_cast<int>(seq.size()) != N) return false;
  std::vector<int> pos(N, -1);
  for (int i = 0; i < N; ++i) {
    if (seq[i] < 0 || seq[i] >= N || pos[seq[i]] >= 0) return false;
    pos[seq[i]] = i;
  }
  for (const auto& [a, b, g] : rs.cone_triples()) {
    int lo = std::min(pos[a], pos[b]);
    int hi = std::max(pos[a], pos[b]);
    if (!(lo < pos[g] && pos[g] < hi)) return false;
  }
  return true;
}

bool is_biclosed(const RootSystem& rs, RootMask set) {
  for (const auto& [a, b, g] : rs.cone_triples()) {
    bool ina = set & root_bit(a), inb = set & root_bit(b), ing = set & root_bit(g);
    if (ina && inb && !ing) return false;
    if (ing && !ina && !inb) return false;
  }
  return true;
}

}  // namespace coxchain
