#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace coxchain {

using Rational = boost::rational<std::int64_t>;
using Gen = int;
using CoxeterWord = std::vector<Gen>;

enum class CartanType { A, B, C, D, F, G };

struct CoxeterSystem {
  CartanType type = CartanType::A;
  int rank = 0;
  std::vector<std::vector<int>> cartan;         // a[s][t]
  std::vector<Rational> symmetrizer;            // delta(s), min value 1
  std::vector<std::vector<int>> coxeter_orders; // m(s,t)

  std::string name() const;
  bool simply_laced() const;
  // (alpha_s, alpha_t) = delta(s) * a[s][t]
  Rational gram(Gen s, Gen t) const { return symmetrizer[s] * cartan[s][t]; }
};

CoxeterSystem build_system(CartanType type, int rank);

// Accepts "A3", "B2", "D4", "G2", "F4" and so on.
CoxeterSystem parse_system(std::string_view tag);

// Throws InvalidArgument unless every letter is a generator.
void validate_word(const CoxeterSystem& sys, const CoxeterWord& word);
// True when each generator occurs exactly once.
bool is_coxeter_word(const CoxeterSystem& sys, const CoxeterWord& word);

template <class T>
Rational symmetric_form(const CoxeterSystem& sys, const std::vector<T>& x,
                        const std::vector<T>& y);

// Euler form attached to the Coxeter word c, diagonal delta(s).
// <x,y> + <y,x> = (x,y).
template <class T>
Rational euler_form(const CoxeterSystem& sys, const CoxeterWord& c,
                    const std::vector<T>& x, const std::vector<T>& y);

template <class T>
Rational skew_form(const CoxeterSystem& sys, const CoxeterWord& c,
                   const std::vector<T>& x, const std::vector<T>& y) {
  return euler_form(sys, c, x, y) - euler_form(sys, c, y, x);
}

}  // namespace coxchain
