#include <doctest.h>

#include <bit>

#include "coxchain/coxeter_element.hpp"
#include "coxchain/roots.hpp"

using namespace coxchain;

TEST_CASE("positive root counts") {
  // closed forms: n(n+1)/2, n^2, n(n-1), 24, 6
  const std::pair<const char*, int> expected[] = {{"A2", 3},  {"A3", 6},  {"A4", 10}, {"B2", 4},
                                                  {"B3", 9},  {"C3", 9},  {"D4", 12}, {"D5", 20},
                                                  {"G2", 6},  {"F4", 24}, {"B4", 16}};
  for (auto [tag, n] : expected) {
    CAPTURE(tag);
    CHECK(RootSystem(parse_system(tag)).size() == n);
  }
}

TEST_CASE("A2 roots and simple indices") {
  RootSystem rs(parse_system("A2"));
  CHECK(rs.coeffs(rs.simple(0)) == std::vector<int>{1, 0});
  CHECK(rs.coeffs(rs.simple(1)) == std::vector<int>{0, 1});
  CHECK(rs.find({1, 1}).has_value());
  CHECK_FALSE(rs.find({2, 1}).has_value());
}

TEST_CASE("G2 highest root") {
  RootSystem rs(parse_system("G2"));
  CHECK(rs.find({3, 2}).has_value());
  CHECK(rs.find({3, 1}).has_value());
  CHECK_FALSE(rs.find({1, 3}).has_value());
}

TEST_CASE("rank-two subsystems") {
  SUBCASE("A2") {
    RootSystem rs(parse_system("A2"));
    REQUIRE(rs.subsystems().size() == 1);
    CHECK_FALSE(rs.subsystems()[0].commutative);
    CHECK(rs.subsystems()[0].roots.size() == 3);
  }
  SUBCASE("A3") {
    RootSystem rs(parse_system("A3"));
    int comm = 0, noncomm = 0;
    for (const auto& s : rs.subsystems()) (s.commutative ? comm : noncomm)++;
    CHECK(noncomm == 4);
    CHECK(comm == 3);
    CHECK(rs.noncommutative().size() == 4);
  }
  SUBCASE("B2 keeps its orthogonal pairs inside the single subsystem") {
    RootSystem rs(parse_system("B2"));
    REQUIRE(rs.subsystems().size() == 1);
    CHECK(rs.subsystems()[0].roots.size() == 4);
  }
}

TEST_CASE("every pair of roots spans exactly one subsystem") {
  for (const char* tag : {"A4", "B3", "D4", "G2", "F4"}) {
    RootSystem rs(parse_system(tag));
    CAPTURE(tag);
    for (int a = 0; a < rs.size(); ++a)
      for (int b = 0; b < rs.size(); ++b) {
        if (a == b) continue;
        int id = rs.subsystem_of(a, b);
        REQUIRE(id >= 0);
        CHECK((rs.subsystems()[id].mask >> a & 1));
        CHECK((rs.subsystems()[id].mask >> b & 1));
        CHECK(id == rs.subsystem_of(b, a));
      }
  }
}

TEST_CASE("simple reflections permute the positive roots other than their own") {
  for (const char* tag : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    RootSystem rs(parse_system(tag));
    for (Gen s = 0; s < rs.rank(); ++s) {
      RootMask image = 0;
      for (int b = 0; b < rs.size(); ++b) {
        auto r = rs.reflect(s, b);
        CHECK(r.negative == (b == rs.simple(s)));
        if (!r.negative) image |= root_bit(r.index);
      }
      CHECK(image == (rs.all_mask() & ~root_bit(rs.simple(s))));
    }
  }
}

TEST_CASE("subsystem order starts and ends at the simple roots of the subsystem") {
  RootSystem rs(parse_system("A2"));
  auto ord = order_subsystem(rs, {0, 1}, rs.subsystems()[0]);
  REQUIRE(ord.size() == 3);
  CHECK(ord[1] == *rs.find({1, 1}));
  auto rev = order_subsystem(rs, {1, 0}, rs.subsystems()[0]);
  CHECK(rev.front() == ord.back());
  CHECK(rev.back() == ord.front());
}
