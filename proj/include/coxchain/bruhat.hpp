#pragma once

#include <string>
#include <vector>

#include "coxchain/cambrian.hpp"
#include "coxchain/chain_orders.hpp"
#include "coxchain/report.hpp"

namespace coxchain {

// Permutations of {0..n} in one-line notation. Nothing here consults the
// root system; the dictionaries to roots live in the check functions.
using Perm = std::vector<int>;

// Reduced words of the longest permutation of S_{n+1}; letter i swaps
// positions i and i+1. Enumeration is split by first letter.
std::vector<CoxeterWord> reduced_words_of_longest(int n, std::size_t max_words = 10'000'000,
                                                  int jobs = 1);

// Classes under commutation moves, by union-find over the word list.
std::vector<int> commutation_classes(const std::vector<CoxeterWord>& words, int* count);

int triple_count(int n);
int triple_index(int n, int i, int j, int k);
// Triples {i<j<k} whose pairs are crossed in the order jk, ik, ij.
Bits triple_key(int n, const CoxeterWord& word);

struct CommutationClass {
  Bits triples;
  CoxeterWord representative;
};

struct HigherBruhat {
  int n = 0;
  std::size_t word_count = 0;
  std::vector<CommutationClass> classes;  // sorted by (popcount, bit string)
  std::vector<Arc> covers;                // single-triple additions
  Preorder order;
  bool keys_match_commutation = false;    // triple keys separate exactly the commutation classes
  bool inclusion_order_equal = false;
};

HigherBruhat build_B_n_2(int n, int jobs = 1);

struct FirstBruhat {
  int n = 0;
  std::vector<Perm> perms;
  Lattice lattice;
};

FirstBruhat build_B_n_1(int n);

// Value pairs a<b appearing as ...b...a...
std::vector<std::pair<int, int>> inverted_pairs(const Perm& p);
// Binary search tree of the values read right to left, serialized.
std::string tamari_tree(const Perm& p);

// Standard type A dictionaries: value pair (a,b) <-> e_a - e_b.
PosIdx root_of_pair(const RootSystem& rs, int a, int b);
int subsystem_of_triple(const RootSystem& rs, int i, int j, int k);

// Element ids of B(n,1) matched with the weak order of A_n.
Report check_first_bruhat(const FirstBruhat& b1, const WeakOrder& wo,
                          std::vector<ElemId>* perm_to_elem = nullptr);
// B(n,2) against the inversion-key MG poset of A_n with the linear element.
Report check_second_bruhat(const HigherBruhat& b2, const WeakOrder& wo, const ChainSet& chains,
                           const MGPoset& fast);

struct MapFResult {
  Report square;      // tree map against the Cambrian congruence and chain map
  Report contraction;
  Report fibres;      // experiment
  int domain_classes = 0;
  int codomain_classes = 0;
};

MapFResult map_f(int n, int jobs = 1);

struct RhboResult {
  Report report;
  int minima = 0, maxima = 0;
  bool is_poset = false, polygon_complete = false, inclusion_equal = false;
  bool from_sorting_word = false;
};

// MG poset for an arbitrary reduced word of w0 as reference.
RhboResult rhbo_experiment(const WeakOrder& wo, const Lattice& L, const PolygonIndex& polys,
                           const ChainSet& chains, const SquareClasses& squares,
                           const CoxeterWord& reference_word, int jobs = 1);

}  // namespace coxchain
