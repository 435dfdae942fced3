#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "coxchain/coxchain.h"

namespace fs = std::filesystem;

namespace {

struct Config {
  std::string type = "A3";
  std::string coxeter = "linear";
  std::string word;
  std::string name;
  std::string out;
  int n = 3;
  int jobs = 1;
  uint64_t max_chains = 0;
  uint64_t max_classes = 0;
  uint64_t seed = 0;
};

int exit_code(coxchain_status s) {
  switch (s) {
    case COXCHAIN_OK: return 0;
    case COXCHAIN_ASSERTION_FAILED: return 1;
    case COXCHAIN_INVALID_ARGUMENT: return 2;
    case COXCHAIN_GUARD_EXCEEDED: return 3;
    default: return 4;
  }
}

int emit(coxchain_status s, coxchain_bundle* b, const Config& cfg) {
  if (!b) {
    std::cerr << "error: " << coxchain_last_error() << "\n";
    return exit_code(s);
  }
  if (!cfg.out.empty()) {
    fs::create_directories(cfg.out);
    for (size_t i = 0; i < coxchain_bundle_size(b); ++i) {
      std::ofstream f(fs::path(cfg.out) / coxchain_bundle_name(b, i), std::ios::binary);
      f << coxchain_bundle_content(b, i);
      if (!f) {
        std::cerr << "error: cannot write " << coxchain_bundle_name(b, i) << "\n";
        coxchain_bundle_free(b);
        return 2;
      }
    }
  } else {
    for (size_t i = 0; i < coxchain_bundle_size(b); ++i)
      if (std::string(coxchain_bundle_name(b, i)).ends_with(".json"))
        std::cout << "== " << coxchain_bundle_name(b, i) << "\n" << coxchain_bundle_content(b, i);
  }
  std::cout << coxchain_bundle_summary(b);
  std::cout << (coxchain_bundle_passed(b) ? "all hard checks passed\n" : "HARD CHECKS FAILED\n");
  coxchain_bundle_free(b);
  return exit_code(s);
}

coxchain_options options(const Config& cfg) {
  coxchain_options o = coxchain_default_options();
  o.jobs = cfg.jobs;
  if (cfg.max_chains) o.max_chains = cfg.max_chains;
  if (cfg.max_classes) o.max_classes = cfg.max_classes;
  if (cfg.seed) o.seed = cfg.seed;
  return o;
}

template <class F>
int with_context(const Config& cfg, F&& fn) {
  coxchain_options o = options(cfg);
  coxchain_context* ctx = nullptr;
  coxchain_status s = coxchain_open(cfg.type.c_str(), &o, &ctx);
  if (s != COXCHAIN_OK) {
    std::cerr << "error: " << coxchain_last_error() << "\n";
    return exit_code(s);
  }
  coxchain_bundle* b = nullptr;
  s = fn(ctx, &b);
  int code = emit(s, b, cfg);
  coxchain_close(ctx);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chains in weak order, Cambrian quotients and higher Bruhat orders"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Directory for artifacts");
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--max-chains", cfg.max_chains, "Guard on maximal chains")->check(CLI::PositiveNumber);
    sub->add_option("--max-classes", cfg.max_classes, "Guard on chain classes")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "Seed for randomized checks");
  };
  auto typed = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type, "Cartan type, e.g. A3, B2, D4, G2, F4");
    common(sub);
  };
  auto with_c = [&](CLI::App* sub) {
    typed(sub);
    sub->add_option("--coxeter", cfg.coxeter, "linear, bipartite or indices like 2,1,3");
  };

  auto gen = app.add_subcommand("gen", "Root system and weak order");
  typed(gen);
  auto mg = app.add_subcommand("mg", "Chain class poset for a Coxeter element");
  with_c(mg);

  auto camb = app.add_subcommand("cambrian", "Cambrian congruence and quotient");
  camb->require_subcommand(1);
  auto quot = camb->add_subcommand("quotient", "Quotient lattice");
  auto cst = camb->add_subcommand("verify-cstable", "Stable edges against contraction");
  auto cmap = camb->add_subcommand("chain-map", "Chain map onto the quotient");
  for (auto* s : {quot, cst, cmap}) with_c(s);

  auto bru = app.add_subcommand("bruhat", "Higher Bruhat orders in type A");
  bru->require_subcommand(1);
  auto build = bru->add_subcommand("build", "B(n,2) from reduced words of w0");
  auto mapf = bru->add_subcommand("map-f", "Tree map onto the Tamari chain poset");
  auto rhbo = bru->add_subcommand("rhbo", "Chain poset for an arbitrary reference word");
  for (auto* s : {build, mapf}) {
    s->add_option("--n", cfg.n, "Number of strands minus one")->required();
    common(s);
  }
  typed(rhbo);
  rhbo->add_option("--word", cfg.word, "Reduced word of w0, 1-based, comma-separated")->required();

  auto all = app.add_subcommand("verify-all", "Every check for a type");
  typed(all);
  auto exp = app.add_subcommand("experiment", "Open-question reports");
  typed(exp);
  exp->add_option("name", cfg.name, "cstable, maxima, fibres, inclusion or rhbo-search")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const char* c = cfg.coxeter.c_str();
  if (*gen) return with_context(cfg, [&](auto* x, auto** b) { return coxchain_gen(x, b); });
  if (*mg) return with_context(cfg, [&](auto* x, auto** b) { return coxchain_mg(x, c, b); });
  if (*quot)
    return with_context(cfg, [&](auto* x, auto** b) { return coxchain_cambrian_quotient(x, c, b); });
  if (*cst)
    return with_context(cfg,
                        [&](auto* x, auto** b) { return coxchain_cambrian_verify_cstable(x, c, b); });
  if (*cmap)
    return with_context(cfg, [&](auto* x, auto** b) { return coxchain_cambrian_chain_map(x, c, b); });
  if (*rhbo)
    return with_context(cfg,
                        [&](auto* x, auto** b) { return coxchain_bruhat_rhbo(x, cfg.word.c_str(), b); });
  if (*all) return with_context(cfg, [&](auto* x, auto** b) { return coxchain_verify_all(x, b); });
  if (*exp)
    return with_context(cfg,
                        [&](auto* x, auto** b) { return coxchain_experiment(x, cfg.name.c_str(), b); });

  coxchain_options o = options(cfg);
  coxchain_bundle* b = nullptr;
  coxchain_status s = *build ? coxchain_bruhat_build(cfg.n, &o, &b) : coxchain_bruhat_map_f(cfg.n, &o, &b);
  return emit(s, b, cfg);
}
