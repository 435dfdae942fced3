#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace coxchain {

using Bits = boost::dynamic_bitset<std::uint64_t>;
using Arc = std::pair<int, int>;

// Bit i of the set becomes character i of the string.
std::string bit_string(const Bits& bits);

// Reflexive-transitive closure of a finite digraph.
class Preorder {
 public:
  Preorder() = default;
  Preorder(int n, std::vector<Arc> arcs);

  int size() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool leq(int a, int b) const { return up_[a][b]; }
  bool less(int a, int b) const { return up_[a][b] && !up_[b][a]; }
  bool equivalent(int a, int b) const { return up_[a][b] && up_[b][a]; }
  const Bits& up_set(int a) const { return up_[a]; }
  const Bits& down_set(int a) const { return down_[a]; }

  bool is_poset() const;
  // x < y strictly with no third element z satisfying x <= z <= y.
  std::vector<Arc> covers() const;
  std::vector<int> minimal() const;
  std::vector<int> maximal() const;

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<Bits> up_, down_;
};

struct Collapse {
  Preorder poset;
  std::vector<int> class_of;  // classes numbered by their smallest member
};

Collapse collapse(const Preorder& p);

// Map induced on collapses by an order-preserving f: P -> Q.
std::vector<int> collapse_map(const Collapse& p, const Collapse& q, const std::vector<int>& f);

struct ContractionReport {
  bool surjective = true;
  bool order_preserving = true;
  bool fibres_connected = true;
  bool covers_lift = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

ContractionReport check_contraction(const Preorder& domain, const Preorder& codomain,
                                    const std::vector<int>& f);

// A fibre is an interval when it has a least and a greatest element and
// contains everything between them.
bool is_interval(const Preorder& p, const std::vector<int>& members);

}  // namespace coxchain
