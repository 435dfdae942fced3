#pragma once

#include <vector>

#include "coxchain/chain_orders.hpp"
#include "coxchain/coxeter_element.hpp"
#include "coxchain/report.hpp"

namespace coxchain {

struct CambrianData {
  const WeakOrder* wo = nullptr;
  const Lattice* weak = nullptr;  // wo->to_lattice()
  CoxeterElement c;
  std::vector<SortingWord> sorting;
  std::vector<char> sortable;
  std::vector<ElemId> pi_down;
  Congruence theta;
  Quotient quotient;  // carries the quotient root labels
  ChainReference reference;          // c-sorting word of w0
  ChainReference inverse_reference;  // c^{-1}-sorting word of w0
  std::vector<std::vector<PosIdx>> subsystem_order;  // by key bit
};

// Builds sortables and both versions of pi_down (the definition and the
// recursion), the congruence, the labelled quotient and the references.
// Any disagreement throws VerificationFailure.
CambrianData build_cambrian(const WeakOrder& wo, const Lattice& weak, const CoxeterElement& c);

ElemId pi_down_recursive(const WeakOrder& wo, const CoxeterWord& c, ElemId w);

bool is_c_aligned(const CambrianData& cd, ElemId w, int key_bit);
bool is_c_aligned(const CambrianData& cd, ElemId w);
bool is_c_stable_edge(const CambrianData& cd, int edge);

struct CStableReport {
  Report hard;          // contraction criterion, plus stability of uncontracted edges
  Report equivalence;   // contracted vs not stable; hard only when simply laced
};

CStableReport verify_cstable(const CambrianData& cd);

std::vector<PosIdx> stable_sequence(const CambrianData& cd, const MaxChain& chain);

struct CambrianChainMap {
  ChainSet quotient_chains;
  PolygonIndex quotient_polygons;
  SquareClasses quotient_squares;
  MGPoset codomain;
  std::vector<int> chain_map;  // weak order chain -> quotient chain
  std::vector<int> class_map;  // domain class -> codomain class
  ContractionReport contraction;
  int minimum_class = -1;  // class of the image of w0(c)
  int inverse_class = -1;  // class of the image of w0(c^{-1})
  Report structure;        // well-definedness, surjectivity, poset, extrema
  Report stability;        // stable sequences against quotient labels
  Report fibres;           // experiment: which fibres are intervals
};

CambrianChainMap cambrian_chain_map(const CambrianData& cd, const ChainSet& chains,
                                    const MGPoset& domain, int jobs = 1,
                                    std::size_t max_chains = kDefaultMaxChains);

Report check_ascending_uncontracted(const CambrianData& cd, const PolygonIndex& weak_polygons);
// Every non-square polygon of the quotient has a two-step descending side.
Report check_quotient_polygons(const CambrianData& cd, const PolygonIndex& quotient_polygons);

}  // namespace coxchain
