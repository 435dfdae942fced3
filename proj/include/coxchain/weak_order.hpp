#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "coxchain/lattice.hpp"
#include "coxchain/roots.hpp"

namespace coxchain {

using ElemId = int;

struct WOElement {
  ElemId id = 0;
  RootMask inv = 0;
  int length = 0;
};

struct WOEdge {
  PosIdx label = 0;
  ElemId target = 0;
};

class WeakOrder {
 public:
  explicit WeakOrder(const RootSystem& rs);

  const RootSystem& roots() const { return *rs_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<WOElement>& elements() const { return elements_; }
  RootMask inv(ElemId w) const { return elements_[w].inv; }
  int length(ElemId w) const { return elements_[w].length; }
  ElemId bottom() const { return 0; }
  ElemId top() const { return top_; }
  const std::vector<WOEdge>& up_edges(ElemId w) const { return up_[w]; }
  const std::vector<WOEdge>& down_edges(ElemId w) const { return down_[w]; }
  std::optional<ElemId> find(RootMask inv) const;

  bool leq(ElemId v, ElemId w) const { return (inv(v) & ~inv(w)) == 0; }
  PosIdx edge_label(ElemId v, ElemId w) const;
  ElemId join(ElemId x, ElemId y) const;
  ElemId meet(ElemId x, ElemId y) const;

  // w(beta) as a signed positive root
  SignedRoot act(ElemId w, PosIdx beta) const { return action_[w][beta]; }
  ElemId right_multiply(ElemId w, Gen s) const { return right_[w][s]; }
  ElemId left_multiply(Gen s, ElemId w) const;
  bool has_left_descent(ElemId w, Gen s) const {
    return (inv(w) & root_bit(rs_->simple(s))) != 0;
  }

  // Element reached from e by the word, or throws if the word is not reduced.
  ElemId evaluate_reduced(const CoxeterWord& word) const;
  // Chain of prefixes of a reduced word of w0.
  MaxChain chain_of_word(const CoxeterWord& word) const;
  CoxeterWord word_of_chain(const MaxChain& chain) const;

  // Cover relations and root labels, for the generic lattice engine.
  Lattice to_lattice() const;

 private:
  const RootSystem* rs_;
  std::vector<WOElement> elements_;
  std::vector<std::vector<WOEdge>> up_, down_;
  std::vector<std::vector<SignedRoot>> action_;
  std::vector<std::vector<ElemId>> right_;
  std::unordered_map<RootMask, ElemId> by_inv_;
  ElemId top_ = 0;
};

std::uint64_t expected_group_order(const CoxeterSystem& sys);

std::vector<PosIdx> root_sequence(const WeakOrder& wo, const MaxChain& chain);
bool validate_admissible(const RootSystem& rs, const std::vector<PosIdx>& seq);

// Closed and coclosed under positive combinations inside rank-two spans.
bool is_biclosed(const RootSystem& rs, RootMask set);

}  // namespace coxchain
