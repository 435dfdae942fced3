#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxchain/bruhat.hpp"
#include "coxchain/cambrian.hpp"
#include "coxchain/report.hpp"

namespace coxchain {

struct Options {
  int jobs = 1;
  std::size_t max_chains = kDefaultMaxChains;
  std::size_t max_classes = 1'000'000;
  std::uint64_t seed = 20240601;
};

// Everything built for one Coxeter system, computed on first use.
class Workspace {
 public:
  explicit Workspace(CoxeterSystem sys, Options opt = {});

  const Options& options() const { return opt_; }
  const CoxeterSystem& system() const { return rs_->system(); }
  const RootSystem& roots() const { return *rs_; }
  const WeakOrder& weak_order() const { return *wo_; }
  const Lattice& lattice() const { return lattice_; }
  const PolygonIndex& polygons();
  const ChainSet& chains();
  // polygon moves of every chain: (neighbour chain, polygon id)
  const std::vector<std::vector<std::pair<int, int>>>& chain_moves();
  const SquareClasses& squares();
  const CambrianData& cambrian(const CoxeterElement& c);
  // Polygon-move construction with the heap of w0(c) as reference.
  const MGPoset& generic_mg(const CoxeterElement& c);
  const MGPoset& fast_mg(const CoxeterElement& c);
  const CambrianChainMap& chain_map(const CoxeterElement& c);

 private:
  Options opt_;
  std::unique_ptr<RootSystem> rs_;
  std::unique_ptr<WeakOrder> wo_;
  Lattice lattice_;
  std::optional<PolygonIndex> polys_;
  std::optional<ChainSet> chains_;
  std::optional<std::vector<std::vector<std::pair<int, int>>>> moves_;
  std::optional<SquareClasses> squares_;
  std::map<std::string, std::unique_ptr<CambrianData>> cambrian_;
  std::map<std::string, MGPoset> generic_, fast_;
  std::map<std::string, CambrianChainMap> chain_map_;
};

using Artifacts = std::map<std::string, std::string>;

struct SuiteResult {
  std::vector<Report> reports;
  Artifacts artifacts;
  bool passed() const;
};

std::uint64_t expected_positive_roots(const CoxeterSystem& sys);
std::uint64_t expected_catalan(const CoxeterSystem& sys);

SuiteResult run_gen(Workspace& ws);
SuiteResult run_mg(Workspace& ws, const CoxeterElement& c);
SuiteResult run_cambrian_quotient(Workspace& ws, const CoxeterElement& c);
SuiteResult run_cambrian_cstable(Workspace& ws, const CoxeterElement& c);
SuiteResult run_cambrian_chain_map(Workspace& ws, const CoxeterElement& c);
SuiteResult run_bruhat_build(int n, const Options& opt);
SuiteResult run_bruhat_map_f(int n, const Options& opt);
SuiteResult run_bruhat_rhbo(Workspace& ws, const CoxeterWord& reference);
// Every invariant of every module for the workspace's type, all Coxeter
// elements, plus the type A bridges where they apply.
SuiteResult run_verify_all(Workspace& ws);

std::vector<std::string> experiment_names();
SuiteResult run_experiment(Workspace& ws, std::string_view name);

// Human-readable pass/fail lines, one per report.
std::string summary_text(const SuiteResult& r);

}  // namespace coxchain
