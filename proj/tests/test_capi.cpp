#include <doctest.h>

#include <cstring>
#include <string>

#include "coxchain/coxchain.h"

namespace {

std::string find_file(const coxchain_bundle* b, const std::string& name) {
  for (size_t i = 0; i < coxchain_bundle_size(b); ++i)
    if (name == coxchain_bundle_name(b, i)) return coxchain_bundle_content(b, i);
  return {};
}

}  // namespace

TEST_CASE("open and close") {
  coxchain_context* ctx = nullptr;
  CHECK(coxchain_open("B2", nullptr, &ctx) == COXCHAIN_OK);
  REQUIRE(ctx != nullptr);
  coxchain_bundle* b = nullptr;
  CHECK(coxchain_gen(ctx, &b) == COXCHAIN_OK);
  REQUIRE(b != nullptr);
  CHECK(coxchain_bundle_passed(b) == 1);
  auto roots = find_file(b, "roots.json");
  CHECK(roots.find("\"type\": \"B2\"") != std::string::npos);
  auto weak = find_file(b, "weak-order.json");
  CHECK(weak.find("\"n\": 8") != std::string::npos);
  CHECK_FALSE(find_file(b, "weak-order.dot").empty());
  coxchain_bundle_free(b);
  coxchain_close(ctx);
}

TEST_CASE("argument errors") {
  coxchain_context* ctx = nullptr;
  CHECK(coxchain_open("Q7", nullptr, &ctx) == COXCHAIN_INVALID_ARGUMENT);
  CHECK(ctx == nullptr);
  CHECK(std::strlen(coxchain_last_error()) > 0);
  CHECK(coxchain_open(nullptr, nullptr, &ctx) == COXCHAIN_INVALID_ARGUMENT);

  coxchain_options bad = coxchain_default_options();
  bad.jobs = 0;
  CHECK(coxchain_open("A2", &bad, &ctx) == COXCHAIN_INVALID_ARGUMENT);

  REQUIRE(coxchain_open("A3", nullptr, &ctx) == COXCHAIN_OK);
  coxchain_bundle* b = nullptr;
  CHECK(coxchain_mg(ctx, "1,1,2", &b) == COXCHAIN_INVALID_ARGUMENT);
  CHECK(b == nullptr);
  CHECK(coxchain_experiment(ctx, "nonsense", &b) == COXCHAIN_INVALID_ARGUMENT);
  CHECK(coxchain_bruhat_rhbo(ctx, "1,2,x", &b) == COXCHAIN_INVALID_ARGUMENT);
  CHECK(coxchain_mg(nullptr, "linear", &b) == COXCHAIN_INVALID_ARGUMENT);
  CHECK(coxchain_bruhat_build(9, nullptr, &b) == COXCHAIN_INVALID_ARGUMENT);
  coxchain_close(ctx);
}

TEST_CASE("guards") {
  coxchain_options o = coxchain_default_options();
  o.max_chains = 10;
  coxchain_context* ctx = nullptr;
  REQUIRE(coxchain_open("A3", &o, &ctx) == COXCHAIN_OK);
  coxchain_bundle* b = nullptr;
  CHECK(coxchain_mg(ctx, "linear", &b) == COXCHAIN_GUARD_EXCEEDED);
  CHECK(b == nullptr);
  coxchain_close(ctx);

  o = coxchain_default_options();
  o.max_classes = 3;
  REQUIRE(coxchain_open("A3", &o, &ctx) == COXCHAIN_OK);
  CHECK(coxchain_mg(ctx, "linear", &b) == COXCHAIN_GUARD_EXCEEDED);
  coxchain_close(ctx);
}

TEST_CASE("verbs produce their files") {
  coxchain_context* ctx = nullptr;
  REQUIRE(coxchain_open("A3", nullptr, &ctx) == COXCHAIN_OK);
  coxchain_bundle* b = nullptr;

  REQUIRE(coxchain_mg(ctx, "linear", &b) == COXCHAIN_OK);
  CHECK_FALSE(find_file(b, "mg-1-2-3.json").empty());
  coxchain_bundle_free(b);

  REQUIRE(coxchain_cambrian_quotient(ctx, "2,1,3", &b) == COXCHAIN_OK);
  CHECK(find_file(b, "cambrian-2-1-3.json").find("\"n\": 14") != std::string::npos);
  CHECK_FALSE(find_file(b, "cambrian-2-1-3.dot").empty());
  coxchain_bundle_free(b);

  REQUIRE(coxchain_cambrian_verify_cstable(ctx, "bipartite", &b) == COXCHAIN_OK);
  CHECK(coxchain_bundle_size(b) == 1);
  coxchain_bundle_free(b);

  REQUIRE(coxchain_cambrian_chain_map(ctx, nullptr, &b) == COXCHAIN_OK);
  CHECK_FALSE(find_file(b, "chain-map-1-2-3.json").empty());
  coxchain_bundle_free(b);

  REQUIRE(coxchain_bruhat_rhbo(ctx, "1,2,1,3,2,1", &b) == COXCHAIN_OK);
  CHECK_FALSE(find_file(b, "rhbo.json").empty());
  coxchain_bundle_free(b);

  REQUIRE(coxchain_experiment(ctx, "inclusion", &b) == COXCHAIN_OK);
  coxchain_bundle_free(b);
  coxchain_close(ctx);

  REQUIRE(coxchain_bruhat_build(3, nullptr, &b) == COXCHAIN_OK);
  CHECK(find_file(b, "bruhat-3-2.json").find("\"n\": 8") != std::string::npos);
  coxchain_bundle_free(b);
  REQUIRE(coxchain_bruhat_map_f(3, nullptr, &b) == COXCHAIN_OK);
  coxchain_bundle_free(b);
}
