#include <doctest.h>

#include "coxchain/cambrian.hpp"
#include "coxchain/error.hpp"
#include "coxchain/verify.hpp"
#include "oracles.hpp"

using namespace coxchain;

namespace {

struct Setup {
  RootSystem rs;
  WeakOrder wo;
  Lattice L;
  explicit Setup(const char* tag) : rs(parse_system(tag)), wo(rs), L(wo.to_lattice()) {}
};

}  // namespace

TEST_CASE("Coxeter element parsing") {
  auto sys = parse_system("A3");
  CHECK(parse_coxeter_element(sys, "linear").word == CoxeterWord{0, 1, 2});
  CHECK(parse_coxeter_element(sys, "2,1,3").label() == "s2s1s3");
  CHECK(same_element(parse_coxeter_element(sys, "2,1,3"), parse_coxeter_element(sys, "2,3,1")));
  CHECK_FALSE(same_element(parse_coxeter_element(sys, "1,2,3"), parse_coxeter_element(sys, "3,2,1")));
  CHECK(all_coxeter_elements(sys).size() == 4);
  CHECK(all_coxeter_elements(parse_system("D4")).size() == 8);
  CHECK_THROWS_AS(parse_coxeter_element(sys, "1,2"), InvalidArgument);
  CHECK_THROWS_AS(parse_coxeter_element(sys, "1,1,2"), InvalidArgument);
  CHECK_THROWS_AS(parse_coxeter_element(sys, "spiral"), InvalidArgument);
  auto bip = bipartite_element(sys);
  CHECK(is_coxeter_word(sys, bip.word));
  CHECK(is_linear_orientation(sys, inverse_element(sys, linear_element(sys))));
  CHECK_FALSE(is_linear_orientation(sys, bip));
}

TEST_CASE("sorting words in A2") {
  Setup s("A2");
  CoxeterWord c{0, 1};
  auto w0 = c_sorting_word(s.wo, c, s.wo.top());
  CHECK(w0.word == CoxeterWord{0, 1, 0});
  CHECK(w0.sortable());
  auto e = c_sorting_word(s.wo, c, s.wo.bottom());
  CHECK(e.word.empty());
  CHECK(e.sortable());
  ElemId s2s1 = s.wo.evaluate_reduced({1, 0});
  CHECK_FALSE(is_c_sortable(s.wo, c, s2s1));
}

TEST_CASE("sortables match the definition by exhaustive reduced words") {
  for (const char* tag : {"A2", "A3", "A4", "B2", "B3", "C3", "G2", "D4"}) {
    CAPTURE(tag);
    Setup s(tag);
    for (const auto& c : all_coxeter_elements(s.rs.system())) {
      CAPTURE(c.label());
      std::uint64_t count = 0;
      for (ElemId w = 0; w < s.wo.size(); ++w) {
        bool sortable = oracle::sortable_by_definition(s.wo, c.word, w);
        CHECK(sortable == is_c_sortable(s.wo, c.word, w));
        count += sortable;
      }
      CHECK(count == expected_catalan(s.rs.system()));
    }
  }
}

TEST_CASE("Catalan numbers") {
  // binomial closed forms per type
  CHECK(expected_catalan(parse_system("A2")) == 5);
  CHECK(expected_catalan(parse_system("A3")) == 14);
  CHECK(expected_catalan(parse_system("A4")) == 42);
  CHECK(expected_catalan(parse_system("B2")) == 6);
  CHECK(expected_catalan(parse_system("B3")) == 20);
  CHECK(expected_catalan(parse_system("D4")) == 50);
  CHECK(expected_catalan(parse_system("G2")) == 8);
  CHECK(expected_catalan(parse_system("F4")) == 105);
}

TEST_CASE("projection down to sortables") {
  for (const char* tag : {"A3", "B3", "G2"}) {
    Setup s(tag);
    for (const auto& c : all_coxeter_elements(s.rs.system())) {
      auto cd = build_cambrian(s.wo, s.L, c);
      for (ElemId w = 0; w < s.wo.size(); ++w) {
        ElemId p = cd.pi_down[w];
        CHECK(cd.sortable[p]);
        CHECK(s.wo.leq(p, w));
        CHECK(cd.pi_down[p] == p);
        CHECK(pi_down_recursive(s.wo, c.word, w) == p);
        if (cd.sortable[w]) CHECK(p == w);
      }
      for (ElemId x = 0; x < s.wo.size(); ++x)
        for (ElemId y = 0; y < s.wo.size(); ++y)
          if (s.wo.leq(x, y)) CHECK(s.wo.leq(cd.pi_down[x], cd.pi_down[y]));
    }
  }
}

TEST_CASE("A2 quotient is a pentagon") {
  Setup s("A2");
  auto cd = build_cambrian(s.wo, s.L, linear_element(s.rs.system()));
  CHECK(cd.quotient.lattice.size() == 5);
  CHECK(cd.quotient.lattice.num_edges() == 5);
}

TEST_CASE("sortable elements are aligned") {
  for (const char* tag : {"A3", "B3", "D4", "G2"}) {
    Setup s(tag);
    for (const auto& c : all_coxeter_elements(s.rs.system())) {
      auto cd = build_cambrian(s.wo, s.L, c);
      for (ElemId w = 0; w < s.wo.size(); ++w) CHECK(static_cast<bool>(cd.sortable[w]) == is_c_aligned(cd, w));
    }
  }
}

TEST_CASE("stability against contraction") {
  for (const char* tag : {"A2", "A3", "D4"}) {
    Setup s(tag);
    for (const auto& c : all_coxeter_elements(s.rs.system())) {
      auto rep = verify_cstable(build_cambrian(s.wo, s.L, c));
      CHECK(rep.hard.ok());
      CHECK(rep.equivalence.failures.empty());
      CHECK_FALSE(rep.equivalence.experiment);
    }
  }
  for (const char* tag : {"B2", "B3", "G2"}) {
    Setup s(tag);
    for (const auto& c : all_coxeter_elements(s.rs.system())) {
      auto rep = verify_cstable(build_cambrian(s.wo, s.L, c));
      CHECK(rep.hard.failures.empty());
      CHECK(rep.equivalence.experiment);
    }
  }
}

TEST_CASE("the sorting chain of w0 is stable throughout") {
  for (const char* tag : {"A3", "B3", "D4"}) {
    Setup s(tag);
    for (const auto& c : all_coxeter_elements(s.rs.system())) {
      auto cd = build_cambrian(s.wo, s.L, c);
      CHECK(stable_sequence(cd, cd.reference.chain).size() == static_cast<std::size_t>(s.rs.size()));
      for (std::size_t i = 0; i + 1 < cd.reference.chain.size(); ++i)
        CHECK_FALSE(cd.theta.contracts(s.L, s.L.edge_id(cd.reference.chain[i], cd.reference.chain[i + 1])));
    }
  }
}

TEST_CASE("chain map onto the quotient") {
  Workspace ws(parse_system("A3"));
  for (const auto& c : all_coxeter_elements(ws.system())) {
    const auto& cm = ws.chain_map(c);
    CHECK(cm.contraction.ok());
    CHECK(cm.structure.ok());
    CHECK(cm.stability.ok());
    CHECK(cm.class_map.size() == 8);
    CHECK(cm.codomain.minima == std::vector<int>{cm.minimum_class});
    auto it = std::find(cm.codomain.maxima.begin(), cm.codomain.maxima.end(), cm.inverse_class);
    CHECK(it != cm.codomain.maxima.end());
  }
  // the image of all 16 chains covers every quotient chain
  auto c = linear_element(ws.system());
  std::set<int> image(ws.chain_map(c).chain_map.begin(), ws.chain_map(c).chain_map.end());
  CHECK(image.size() == ws.chain_map(c).quotient_chains.size());
}

TEST_CASE("ascending sides survive and quotient polygons lift") {
  for (const char* tag : {"A2", "A3", "B3"}) {
    Workspace ws(parse_system(tag));
    for (const auto& c : all_coxeter_elements(ws.system())) {
      CHECK(check_ascending_uncontracted(ws.cambrian(c), ws.polygons()).ok());
      CHECK(check_quotient_polygons(ws.cambrian(c), ws.chain_map(c).quotient_polygons).ok());
    }
  }
}
