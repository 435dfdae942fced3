#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "coxchain/preorder.hpp"

namespace coxchain {

using MaxChain = std::vector<int>;
inline constexpr std::size_t kDefaultMaxChains = 10'000'000;

// Finite lattice given by its Hasse diagram, optionally edge labelled.
// Construction verifies acyclicity, boundedness and existence of all joins
// and meets; failures throw InvalidArgument.
class Lattice {
 public:
  Lattice() = default;
  Lattice(int n, std::vector<Arc> covers);

  int size() const { return n_; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  int num_edges() const { return static_cast<int>(covers_.size()); }
  // sorted by (lo, hi); the index is the edge id
  const std::vector<Arc>& covers() const { return covers_; }
  const Arc& edge(int e) const { return covers_[e]; }
  int edge_id(int lo, int hi) const;

  const std::vector<int>& up(int x) const { return up_[x]; }
  const std::vector<int>& up_edges(int x) const { return up_edge_[x]; }
  const std::vector<int>& down(int x) const { return down_[x]; }
  const std::vector<int>& down_edges(int x) const { return down_edge_[x]; }

  bool leq(int a, int b) const { return upset_[a][b]; }
  const Bits& up_set(int a) const { return upset_[a]; }
  const Bits& down_set(int a) const { return downset_[a]; }
  int join(int a, int b) const { return join_[std::size_t(a) * n_ + b]; }
  int meet(int a, int b) const { return meet_[std::size_t(a) * n_ + b]; }
  int rank(int x) const { return rank_[x]; }

  bool labelled() const { return !labels_.empty(); }
  int label(int e) const { return labels_[e]; }
  const std::vector<int>& labels() const { return labels_; }
  int label_universe() const { return label_universe_; }
  void set_labels(std::vector<int> labels, int universe);

 private:
  int n_ = 0;
  int bottom_ = 0, top_ = 0;
  std::vector<Arc> covers_;
  std::vector<std::vector<int>> up_, up_edge_, down_, down_edge_;
  std::vector<Bits> upset_, downset_;
  std::vector<int> join_, meet_, rank_;
  std::vector<int> labels_;
  int label_universe_ = 0;
};

struct Polygon {
  int min = 0, max = 0;
  std::vector<int> left, right;  // both include min and max; left goes through the smaller atom
  bool square() const { return left.size() == 3 && right.size() == 3; }
};

// The interval [x, z] when it is a polygon.
std::optional<Polygon> polygon_of_interval(const Lattice& L, int x, int z);

// First failure of either polygonality condition, described in words.
std::optional<std::string> polygonal_violation(const Lattice& L);
inline bool is_polygonal(const Lattice& L) { return !polygonal_violation(L); }

struct PolygonIndex {
  std::vector<Polygon> polygons;
  std::vector<std::vector<int>> by_min;  // polygon ids keyed by bottom element
};

PolygonIndex enumerate_polygons(const Lattice& L);

struct Forcing {
  std::vector<Bits> forces;  // forces[e][f]: contracting e contracts f
  std::vector<int> edge_class;
  int num_classes = 0;
  bool equivalent(int e, int f) const { return edge_class[e] == edge_class[f]; }
};

Forcing forcing_preorder(const Lattice& L, const PolygonIndex& polys);
std::optional<std::string> forcing_consistency_violation(const Lattice& L, const Forcing& F);

struct Congruence {
  std::vector<int> class_of;  // classes numbered by smallest member
  int num_classes = 0;
  std::vector<int> removed_edges;
  std::vector<std::vector<int>> members;
  bool contracts(const Lattice& L, int e) const {
    return class_of[L.edge(e).first] == class_of[L.edge(e).second];
  }
};

// Throws VerificationFailure unless the partition is a lattice congruence
// with interval classes. The congruence law is checked on every pair inside
// a class against every element.
Congruence congruence_from_partition(const Lattice& L, const std::vector<int>& partition);
Congruence congruence_from_edges(const Lattice& L, const Forcing& F, const std::vector<int>& seed);

struct Quotient {
  Lattice lattice;
  std::vector<int> q;
};

Quotient quotient(const Lattice& L, const Congruence& theta);
// Labels of L/theta read off any representative cover; constancy is checked.
std::vector<int> quotient_edge_labels(const Lattice& L, const Congruence& theta,
                                      const Quotient& Q);

using ChainHash = boost::hash<MaxChain>;

struct ChainSet {
  std::vector<MaxChain> chains;
  std::unordered_map<MaxChain, int, ChainHash> index;
  std::size_t size() const { return chains.size(); }
  int find(const MaxChain& c) const {
    auto it = index.find(c);
    return it == index.end() ? -1 : it->second;
  }
};

// Depth-first enumeration of maximal chains that start with a fixed prefix.
class ChainIterator {
 public:
  ChainIterator(const Lattice& L, MaxChain prefix);
  bool next(MaxChain& out);

 private:
  const Lattice* L_;
  std::size_t base_;
  MaxChain path_;
  std::vector<std::size_t> choice_;
  bool started_ = false, done_ = false;
};

// Chains in depth-first order, ascending target id at every step. The work
// is split over the atoms; the output order does not depend on `jobs`.
ChainSet enumerate_chains(const Lattice& L, std::size_t max_chains = kDefaultMaxChains,
                          int jobs = 1);

MaxChain chain_image(const std::vector<int>& q, const MaxChain& chain);
std::vector<int> chain_labels(const Lattice& L, const MaxChain& chain);

struct ChainMove {
  int polygon = 0;
  bool from_left = false;
  MaxChain result;
};

std::vector<ChainMove> polygon_move_neighbors(const Lattice& L, const PolygonIndex& polys,
                                              const MaxChain& chain);

struct SquareClasses {
  std::vector<int> class_of;  // per chain, classes numbered by first chain
  int count = 0;
  std::vector<int> representative;
  bool polygon_connected = false;
};

SquareClasses square_equivalence_classes(const Lattice& L, const PolygonIndex& polys,
                                         const ChainSet& chains, int jobs = 1);

struct ChainClass {
  Bits key;  // empty unless the classes come from inversion keys
  int representative = 0;  // chain index
};

struct MGPoset {
  std::vector<ChainClass> classes;
  std::vector<int> chain_class;
  std::vector<Arc> moves;  // increasing moves between distinct classes
  std::size_t self_moves = 0;
  Preorder order;
  std::vector<Arc> covers;
  bool is_poset = false;
  bool polygon_complete = false;
  std::vector<int> minima, maxima;
};

// Non-square polygons must have one ascending and one descending side
// with respect to the reference order on labels.
std::optional<std::string> polygonal_labelling_violation(const Lattice& L,
                                                         const PolygonIndex& polys,
                                                         const Preorder& reference);
// Which side of polygon p ascends; requires the labelling to be polygonal.
bool left_side_ascends(const Lattice& L, const Polygon& p, const Preorder& reference);

MGPoset mg_preorder(const Lattice& L, const PolygonIndex& polys, const ChainSet& chains,
                    const SquareClasses& squares, const Preorder& reference, int jobs = 1);

// Fill order, covers, flags and extrema from the class list and moves.
void finish_mg(MGPoset& mg);

}  // namespace coxchain
