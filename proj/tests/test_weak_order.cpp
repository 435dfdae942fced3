#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>

#include "coxchain/weak_order.hpp"
#include "oracles.hpp"

using namespace coxchain;

TEST_CASE("group orders") {
  // (n+1)!, 2^n n!, 2^(n-1) n!, 1152, 12
  const std::pair<const char*, std::uint64_t> expected[] = {
      {"A2", oracle::factorial(3)},       {"A3", oracle::factorial(4)},
      {"A4", oracle::factorial(5)},       {"B2", 4 * oracle::factorial(2)},
      {"B3", 8 * oracle::factorial(3)},   {"C3", 8 * oracle::factorial(3)},
      {"D4", 8 * oracle::factorial(4)},   {"G2", 12}};
  for (auto [tag, n] : expected) {
    CAPTURE(tag);
    RootSystem rs(parse_system(tag));
    WeakOrder wo(rs);
    CHECK(static_cast<std::uint64_t>(wo.size()) == n);
    CHECK(expected_group_order(rs.system()) == n);
    CHECK(wo.length(wo.top()) == rs.size());
  }
}

TEST_CASE("A2 chain through s1 gives alpha1, alpha1+alpha2, alpha2") {
  RootSystem rs(parse_system("A2"));
  WeakOrder wo(rs);
  auto chain = wo.chain_of_word({0, 1, 0});
  auto seq = root_sequence(wo, chain);
  REQUIRE(seq.size() == 3);
  CHECK(rs.coeffs(seq[0]) == std::vector<int>{1, 0});
  CHECK(rs.coeffs(seq[1]) == std::vector<int>{1, 1});
  CHECK(rs.coeffs(seq[2]) == std::vector<int>{0, 1});
  CHECK(wo.word_of_chain(chain) == CoxeterWord{0, 1, 0});
}

TEST_CASE("inversion update and descents") {
  for (const char* tag : {"A3", "B3", "G2", "D4"}) {
    RootSystem rs(parse_system(tag));
    WeakOrder wo(rs);
    for (ElemId w = 0; w < wo.size(); ++w)
      for (Gen s = 0; s < rs.rank(); ++s) {
        ElemId ws = wo.right_multiply(w, s);
        CHECK(wo.right_multiply(ws, s) == w);
        CHECK(std::abs(wo.length(ws) - wo.length(w)) == 1);
        ElemId sw = wo.left_multiply(s, w);
        CHECK(wo.left_multiply(s, sw) == w);
        CHECK(wo.has_left_descent(w, s) == (wo.length(sw) < wo.length(w)));
      }
  }
}

TEST_CASE("biclosed subsets are exactly the inversion sets") {
  for (const char* tag : {"A2", "A3", "B2", "B3", "C3", "G2"}) {
    CAPTURE(tag);
    RootSystem rs(parse_system(tag));
    WeakOrder wo(rs);
    REQUIRE(rs.size() <= 9);
    std::size_t biclosed = 0;
    for (RootMask m = 0; m < (RootMask(1) << rs.size()); ++m) {
      bool oracle_says = oracle::biclosed_by_brute_force(rs, m);
      CHECK(oracle_says == is_biclosed(rs, m));
      CHECK(oracle_says == wo.find(m).has_value());
      biclosed += oracle_says;
    }
    CHECK(biclosed == static_cast<std::size_t>(wo.size()));
  }
}

TEST_CASE("admissibility over all orderings of the A3 roots") {
  RootSystem rs(parse_system("A3"));
  WeakOrder wo(rs);
  std::vector<PosIdx> seq(rs.size());
  std::iota(seq.begin(), seq.end(), 0);
  // an ordering is admissible exactly when every prefix is an inversion set
  int admissible = 0;
  do {
    RootMask prefix = 0;
    bool all_prefixes = true;
    for (PosIdx b : seq) {
      prefix |= root_bit(b);
      if (!wo.find(prefix)) all_prefixes = false;
    }
    CHECK(validate_admissible(rs, seq) == all_prefixes);
    admissible += all_prefixes;
  } while (std::next_permutation(seq.begin(), seq.end()));
  CHECK(admissible == 16);
}

TEST_CASE("lattice operations agree with the inversion set order") {
  RootSystem rs(parse_system("B3"));
  WeakOrder wo(rs);
  Lattice L = wo.to_lattice();
  for (ElemId a = 0; a < wo.size(); ++a)
    for (ElemId b = 0; b < wo.size(); ++b) {
      ElemId j = L.join(a, b);
      CHECK((wo.inv(a) | wo.inv(b)) == ((wo.inv(a) | wo.inv(b)) & wo.inv(j)));
      for (ElemId z = 0; z < wo.size(); ++z)
        if (wo.leq(a, z) && wo.leq(b, z)) CHECK(wo.leq(j, z));
      CHECK(L.meet(a, b) == wo.meet(a, b));
    }
}
