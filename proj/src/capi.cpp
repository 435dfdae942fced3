#include "coxchain/coxchain.h"

#include <boost/algorithm/string.hpp>
#include <boost/lexical_cast.hpp>
#include <exception>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "coxchain/error.hpp"
#include "coxchain/verify.hpp"

struct coxchain_context {
  coxchain::Workspace ws;
};

struct coxchain_bundle {
  std::vector<std::pair<std::string, std::string>> files;
  std::string summary;
  bool passed = true;
};

namespace {

thread_local std::string last_error;

coxchain::Options to_options(const coxchain_options* o) {
  coxchain::Options opt;
  if (!o) return opt;
  if (o->jobs < 1 || o->max_chains == 0 || o->max_classes == 0)
    throw coxchain::InvalidArgument("jobs and guards must be positive");
  opt.jobs = o->jobs;
  opt.max_chains = o->max_chains;
  opt.max_classes = o->max_classes;
  opt.seed = o->seed;
  return opt;
}

coxchain::CoxeterElement element(coxchain_context* ctx, const char* text) {
  return coxchain::parse_coxeter_element(ctx->ws.system(), text ? text : "linear");
}

// Runs fn, converting exceptions into status codes.
template <class F>
coxchain_status guarded(F&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const coxchain::InvalidArgument& e) {
    last_error = e.what();
    return COXCHAIN_INVALID_ARGUMENT;
  } catch (const coxchain::GuardExceeded& e) {
    last_error = e.what();
    return COXCHAIN_GUARD_EXCEEDED;
  } catch (const coxchain::VerificationFailure& e) {
    last_error = e.what();
    return COXCHAIN_ASSERTION_FAILED;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return COXCHAIN_GUARD_EXCEEDED;
  } catch (const std::exception& e) {
    last_error = e.what();
    return COXCHAIN_INTERNAL_ERROR;
  }
}

template <class F>
coxchain_status run_suite(coxchain_bundle** out, F&& fn) {
  if (!out) {
    last_error = "null output pointer";
    return COXCHAIN_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&]() -> coxchain_status {
    coxchain::SuiteResult r = fn();
    auto b = std::make_unique<coxchain_bundle>();
    for (auto& [name, content] : r.artifacts) b->files.emplace_back(name, std::move(content));
    b->summary = coxchain::summary_text(r);
    b->passed = r.passed();
    *out = b.release();
    if ((*out)->passed) return COXCHAIN_OK;
    last_error = "hard checks failed";
    return COXCHAIN_ASSERTION_FAILED;
  });
}

coxchain::CoxeterWord parse_word(const char* text) {
  if (!text) throw coxchain::InvalidArgument("missing word");
  std::vector<std::string> parts;
  boost::split(parts, std::string(text), boost::is_any_of(","));
  coxchain::CoxeterWord w;
  for (auto& p : parts) {
    boost::trim(p);
    if (p.empty()) continue;
    try {
      w.push_back(boost::lexical_cast<int>(p) - 1);
    } catch (const boost::bad_lexical_cast&) {
      throw coxchain::InvalidArgument("bad generator '" + p + "'");
    }
  }
  return w;
}

}  // namespace

extern "C" {

coxchain_options coxchain_default_options(void) {
  coxchain::Options d;
  return {d.jobs, d.max_chains, d.max_classes, d.seed};
}

const char* coxchain_last_error(void) { return last_error.c_str(); }

const char* coxchain_version(void) { return "1.0.0"; }

coxchain_status coxchain_open(const char* type, const coxchain_options* opts,
                              coxchain_context** out) {
  if (!out || !type) {
    last_error = "null argument";
    return COXCHAIN_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    auto sys = coxchain::parse_system(type);
    *out = new coxchain_context{coxchain::Workspace(std::move(sys), to_options(opts))};
    return COXCHAIN_OK;
  });
}

void coxchain_close(coxchain_context* ctx) { delete ctx; }

size_t coxchain_bundle_size(const coxchain_bundle* b) { return b ? b->files.size() : 0; }

const char* coxchain_bundle_name(const coxchain_bundle* b, size_t i) {
  return b && i < b->files.size() ? b->files[i].first.c_str() : nullptr;
}

const char* coxchain_bundle_content(const coxchain_bundle* b, size_t i) {
  return b && i < b->files.size() ? b->files[i].second.c_str() : nullptr;
}

int coxchain_bundle_passed(const coxchain_bundle* b) { return b && b->passed ? 1 : 0; }

const char* coxchain_bundle_summary(const coxchain_bundle* b) { return b ? b->summary.c_str() : ""; }

void coxchain_bundle_free(coxchain_bundle* b) { delete b; }

#define COXCHAIN_NEED_CTX                  \
  if (!ctx) {                              \
    last_error = "null context";           \
    return COXCHAIN_INVALID_ARGUMENT;      \
  }

coxchain_status coxchain_gen(coxchain_context* ctx, coxchain_bundle** out) {
  COXCHAIN_NEED_CTX
  return run_suite(out, [&] { return coxchain::run_gen(ctx->ws); });
}

coxchain_status coxchain_mg(coxchain_context* ctx, const char* coxeter, coxchain_bundle** out) {
  COXCHAIN_NEED_CTX
  return run_suite(out, [&] { return coxchain::run_mg(ctx->ws, element(ctx, coxeter)); });
}

coxchain_status coxchain_cambrian_quotient(coxchain_context* ctx, const char* coxeter,
                                           coxchain_bundle** out) {
  COXCHAIN_NEED_CTX
  return run_suite(out,
                   [&] { return coxchain::run_cambrian_quotient(ctx->ws, element(ctx, coxeter)); });
}

coxchain_status coxchain_cambrian_verify_cstable(coxchain_context* ctx, const char* coxeter,
                                                 coxchain_bundle** out) {
  COXCHAIN_NEED_CTX
  return run_suite(out,
                   [&] { return coxchain::run_cambrian_cstable(ctx->ws, element(ctx, coxeter)); });
}

coxchain_status coxchain_cambrian_chain_map(coxchain_context* ctx, const char* coxeter,
                                            coxchain_bundle** out) {
  COXCHAIN_NEED_CTX
  return run_suite(
      out, [&] { return coxchain::run_cambrian_chain_map(ctx->ws, element(ctx, coxeter)); });
}

coxchain_status coxchain_bruhat_build(int n, const coxchain_options* opts, coxchain_bundle** out) {
  return run_suite(out, [&] { return coxchain::run_bruhat_build(n, to_options(opts)); });
}

coxchain_status coxchain_bruhat_map_f(int n, const coxchain_options* opts, coxchain_bundle** out) {
  return run_suite(out, [&] { return coxchain::run_bruhat_map_f(n, to_options(opts)); });
}

coxchain_status coxchain_bruhat_rhbo(coxchain_context* ctx, const char* word,
                                     coxchain_bundle** out) {
  COXCHAIN_NEED_CTX
  return run_suite(out, [&] { return coxchain::run_bruhat_rhbo(ctx->ws, parse_word(word)); });
}

coxchain_status coxchain_verify_all(coxchain_context* ctx, coxchain_bundle** out) {
  COXCHAIN_NEED_CTX
  return run_suite(out, [&] { return coxchain::run_verify_all(ctx->ws); });
}

coxchain_status coxchain_experiment(coxchain_context* ctx, const char* name,
                                    coxchain_bundle** out) {
  COXCHAIN_NEED_CTX
  return run_suite(out, [&] {
    if (!name) throw coxchain::InvalidArgument("missing experiment name");
    return coxchain::run_experiment(ctx->ws, name);
  });
}

}  // extern "C"
