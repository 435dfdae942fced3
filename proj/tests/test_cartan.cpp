#include <doctest.h>

#include "coxchain/cartan.hpp"
#include "coxchain/coxeter_element.hpp"
#include "coxchain/error.hpp"

#include <random>

using namespace coxchain;

TEST_CASE("rank two Cartan products determine m") {
  auto a2 = parse_system("A2");
  CHECK(a2.cartan == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
  CHECK(a2.coxeter_orders[0][1] == 3);
  auto b2 = parse_system("B2");
  CHECK(b2.cartan[0][1] * b2.cartan[1][0] == 2);
  CHECK(b2.coxeter_orders[0][1] == 4);
  auto g2 = parse_system("G2");
  CHECK(g2.cartan[0][1] * g2.cartan[1][0] == 3);
  CHECK(g2.coxeter_orders[0][1] == 6);
}

TEST_CASE("symmetrizer makes delta(s) a(s,t) symmetric") {
  for (const char* tag : {"A4", "B3", "C3", "D4", "F4", "G2"}) {
    auto sys = parse_system(tag);
    CAPTURE(tag);
    for (int s = 0; s < sys.rank; ++s)
      for (int t = 0; t < sys.rank; ++t) CHECK(sys.gram(s, t) == sys.gram(t, s));
  }
}

TEST_CASE("simply laced flag") {
  CHECK(parse_system("A3").simply_laced());
  CHECK(parse_system("D4").simply_laced());
  CHECK_FALSE(parse_system("B3").simply_laced());
  CHECK_FALSE(parse_system("G2").simply_laced());
}

TEST_CASE("bad tags are rejected") {
  for (const char* tag : {"", "A0", "D3", "G3", "F5", "X2", "B", "A2x", "E6"})
    CHECK_THROWS_AS(parse_system(tag), InvalidArgument);
}

TEST_CASE("Euler form of A2 with c = s1 s2") {
  auto sys = parse_system("A2");
  CoxeterWord c{0, 1};
  std::vector<int> a1{1, 0}, a2{0, 1};
  CHECK(euler_form(sys, c, a2, a1) == Rational(-1));
  CHECK(euler_form(sys, c, a1, a2) == Rational(0));
  CHECK(skew_form(sys, c, a2, a1) == Rational(-1));
}

TEST_CASE("Euler form symmetrizes for random rational vectors") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  for (const char* tag : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    auto sys = parse_system(tag);
    for (const auto& c : all_coxeter_elements(sys))
      for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> x(sys.rank), y(sys.rank);
        for (auto& v : x) v = Rational(num(rng), den(rng));
        for (auto& v : y) v = Rational(num(rng), den(rng));
        CHECK(euler_form(sys, c.word, x, y) + euler_form(sys, c.word, y, x) ==
              symmetric_form(sys, x, y));
      }
  }
}

TEST_CASE("Coxeter words") {
  auto sys = parse_system("A3");
  CHECK(is_coxeter_word(sys, {2, 0, 1}));
  CHECK_FALSE(is_coxeter_word(sys, {0, 0, 1}));
  CHECK_THROWS_AS(validate_word(sys, {0, 3}), InvalidArgument);
}
