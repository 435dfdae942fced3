#include <doctest.h>

#include <random>

#include "coxchain/verify.hpp"

using namespace coxchain;

// Randomized checks with fixed seeds over every type in scope.

namespace {
const char* const kTypes[] = {"A3", "A4", "B3", "C3", "D4", "G2", "B2"};
}

TEST_CASE("join and meet laws") {
  std::mt19937_64 rng(11);
  for (const char* tag : kTypes) {
    Workspace ws(parse_system(tag));
    const auto& L = ws.lattice();
    std::uniform_int_distribution<int> pick(0, L.size() - 1);
    for (int trial = 0; trial < 400; ++trial) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(L.join(a, L.join(b, c)) == L.join(L.join(a, b), c));
      CHECK(L.meet(a, L.meet(b, c)) == L.meet(L.meet(a, b), c));
      CHECK(L.join(a, L.meet(a, b)) == a);
      CHECK(L.meet(a, L.join(a, b)) == a);
      CHECK(L.join(a, b) == L.join(b, a));
    }
  }
}

TEST_CASE("right multiplication adds w(alpha_s) to the inversion set") {
  std::mt19937_64 rng(12);
  for (const char* tag : kTypes) {
    Workspace ws(parse_system(tag));
    const auto& wo = ws.weak_order();
    std::uniform_int_distribution<int> pick(0, wo.size() - 1), gen(0, ws.system().rank - 1);
    for (int trial = 0; trial < 500; ++trial) {
      ElemId w = pick(rng);
      Gen s = gen(rng);
      ElemId ws_ = wo.right_multiply(w, s);
      SignedRoot image = wo.act(w, wo.roots().simple(s));
      if (image.negative) {
        CHECK(wo.length(ws_) == wo.length(w) - 1);
        CHECK(wo.inv(w) == (wo.inv(ws_) | root_bit(image.index)));
      } else {
        CHECK(wo.inv(ws_) == (wo.inv(w) | root_bit(image.index)));
        CHECK(wo.edge_label(w, ws_) == image.index);
      }
    }
  }
}

TEST_CASE("random reduced words evaluate along their chains") {
  std::mt19937_64 rng(15);
  for (const char* tag : kTypes) {
    Workspace ws(parse_system(tag));
    const auto& wo = ws.weak_order();
    for (int trial = 0; trial < 100; ++trial) {
      ElemId w = wo.bottom();
      CoxeterWord word;
      while (w != wo.top()) {
        const auto& up = wo.up_edges(w);
        std::uniform_int_distribution<std::size_t> pick(0, up.size() - 1);
        ElemId next = up[pick(rng)].target;
        for (Gen s = 0; s < ws.system().rank; ++s)
          if (wo.right_multiply(w, s) == next) word.push_back(s);
        w = next;
      }
      CHECK(wo.evaluate_reduced(word) == wo.top());
      CHECK(wo.word_of_chain(wo.chain_of_word(word)) == word);
      CHECK(ws.chains().find(wo.chain_of_word(word)) >= 0);
    }
  }
}

TEST_CASE("Cambrian congruence is a lattice homomorphism onto the quotient") {
  std::mt19937_64 rng(13);
  for (const char* tag : kTypes) {
    Workspace ws(parse_system(tag));
    const auto& L = ws.lattice();
    std::uniform_int_distribution<int> pick(0, L.size() - 1);
    for (const auto& c : all_coxeter_elements(ws.system())) {
      const auto& cd = ws.cambrian(c);
      const auto& Q = cd.quotient.lattice;
      const auto& q = cd.quotient.q;
      for (int trial = 0; trial < 200; ++trial) {
        int a = pick(rng), b = pick(rng);
        CHECK(q[L.join(a, b)] == Q.join(q[a], q[b]));
        CHECK(q[L.meet(a, b)] == Q.meet(q[a], q[b]));
      }
    }
  }
}

TEST_CASE("random chains map into their classes monotonically") {
  std::mt19937_64 rng(14);
  for (const char* tag : {"A3", "B3", "A4"}) {
    Workspace ws(parse_system(tag));
    for (const auto& c : all_coxeter_elements(ws.system())) {
      const auto& mg = ws.generic_mg(c);
      const auto& cm = ws.chain_map(c);
      std::uniform_int_distribution<int> pick(0, static_cast<int>(ws.chains().size()) - 1);
      for (int trial = 0; trial < 100; ++trial) {
        int x = pick(rng), y = pick(rng);
        int a = mg.chain_class[x], b = mg.chain_class[y];
        if (mg.order.leq(a, b)) CHECK(cm.codomain.order.leq(cm.class_map[a], cm.class_map[b]));
      }
    }
  }
}
