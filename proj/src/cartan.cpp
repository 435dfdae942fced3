#include "coxchain/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "coxchain/error.hpp"

namespace coxchain {

namespace {

char type_letter(CartanType t) {
  switch (t) {
    case CartanType::A: return 'A';
    case CartanType::B: return 'B';
    case CartanType::C: return 'C';
    case CartanType::D: return 'D';
    case CartanType::F: return 'F';
    case CartanType::G: return 'G';
  }
  return '?';
}

// Gram matrix of (alpha_s, alpha_t), integer valued, short roots of squared
// length 2.
std::vector<std::vector<int>> gram_matrix(CartanType type, int n) {
  std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
  auto link = [&](int s, int t, int v) { g[s][t] = g[t][s] = v; };
  switch (type) {
    case CartanType::A:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case CartanType::B:
      // alpha_n short
      for (int i = 0; i < n; ++i) g[i][i] = (i + 1 < n) ? 4 : 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case CartanType::C:
      // alpha_n long
      for (int i = 0; i < n; ++i) g[i][i] = (i + 1 < n) ? 2 : 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case CartanType::D:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case CartanType::F:
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case CartanType::G:
      g[0][0] = 2;
      g[1][1] = 6;
      link(0, 1, -3);
      break;
  }
  return g;
}

bool rank_supported(CartanType type, int n) {
  switch (type) {
    case CartanType::A: return n >= 1;
    case CartanType::B:
    case CartanType::C: return n >= 2;
    case CartanType::D: return n >= 4;
    case CartanType::F: return n == 4;
    case CartanType::G: return n == 2;
  }
  return false;
}

int order_from_product(int p) {
  switch (p) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw InvalidArgument("Cartan product outside the crystallographic range");
}

}  // namespace

std::string CoxeterSystem::name() const {
  return std::string(1, type_letter(type)) + std::to_string(rank);
}

bool CoxeterSystem::simply_laced() const {
  for (int s = 0; s < rank; ++s)
    for (int t = 0; t < rank; ++t)
      if (s != t && cartan[s][t] < -1) return false;
  return true;
}

CoxeterSystem build_system(CartanType type, int rank) {
  if (!rank_supported(type, rank))
    throw InvalidArgument(std::string("unsupported rank ") + std::to_string(rank) +
                          " for type " + type_letter(type));
  auto g = gram_matrix(type, rank);
  CoxeterSystem sys;
  sys.type = type;
  sys.rank = rank;
  sys.cartan.assign(rank, std::vector<int>(rank, 0));
  sys.symmetrizer.resize(rank);
  int min_len = g[0][0];
  for (int s = 0; s < rank; ++s) min_len = std::min(min_len, g[s][s]);
  for (int s = 0; s < rank; ++s) {
    sys.symmetrizer[s] = Rational(g[s][s], min_len);
    for (int t = 0; t < rank; ++t) sys.cartan[s][t] = 2 * g[s][t] / g[s][s];
  }
  sys.coxeter_orders.assign(rank, std::vector<int>(rank, 1));
  for (int s = 0; s < rank; ++s)
    for (int t = 0; t < rank; ++t)
      if (s != t)
        sys.coxeter_orders[s][t] = order_from_product(sys.cartan[s][t] * sys.cartan[t][s]);
  return sys;
}

CoxeterSystem parse_system(std::string_view tag) {
  if (tag.size() < 2) throw InvalidArgument("type tag too short: '" + std::string(tag) + "'");
  CartanType type;
  switch (std::toupper(static_cast<unsigned char>(tag[0]))) {
    case 'A': type = CartanType::A; break;
    case 'B': type = CartanType::B; break;
    case 'C': type = CartanType::C; break;
    case 'D': type = CartanType::D; break;
    case 'F': type = CartanType::F; break;
    case 'G': type = CartanType::G; break;
    default: throw InvalidArgument("unknown type letter in '" + std::string(tag) + "'");
  }
  int rank = 0;
  auto digits = tag.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw InvalidArgument("bad rank in type tag '" + std::string(tag) + "'");
  return build_system(type, rank);
}

void validate_word(const CoxeterSystem& sys, const CoxeterWord& word) {
  for (Gen s : word)
    if (s < 0 || s >= sys.rank)
      throw InvalidArgument("letter " + std::to_string(s + 1) + " is not a generator of " +
                            sys.name());
}

bool is_coxeter_word(const CoxeterSystem& sys, const CoxeterWord& word) {
  if (static_cast<int>(word.size()) != sys.rank) return false;
  std::vector<bool> seen(sys.rank, false);
  for (Gen s : word) {
    if (s < 0 || s >= sys.rank || seen[s]) return false;
    seen[s] = true;
  }
  return true;
}

template <class T>
Rational symmetric_form(const CoxeterSystem& sys, const std::vector<T>& x,
                        const std::vector<T>& y) {
  if (static_cast<int>(x.size()) != sys.rank || static_cast<int>(y.size()) != sys.rank)
    throw InvalidArgument("vector length does not match rank");
  Rational acc = 0;
  for (int s = 0; s < sys.rank; ++s) {
    if (x[s] == T(0)) continue;
    for (int t = 0; t < sys.rank; ++t) {
      if (y[t] == T(0)) continue;
      acc += sys.gram(s, t) * Rational(x[s]) * Rational(y[t]);
    }
  }
  return acc;
}

template <class T>
Rational euler_form(const CoxeterSystem& sys, const CoxeterWord& c, const std::vector<T>& x,
                    const std::vector<T>& y) {
  if (!is_coxeter_word(sys, c)) throw InvalidArgument("not a Coxeter word");
  if (static_cast<int>(x.size()) != sys.rank || static_cast<int>(y.size()) != sys.rank)
    throw InvalidArgument("vector length does not match rank");
  std::vector<int> pos(sys.rank);
  for (int i = 0; i < sys.rank; ++i) pos[c[i]] = i;
  Rational acc = 0;
  for (int s = 0; s < sys.rank; ++s) {
    if (x[s] == T(0)) continue;
    for (int t = 0; t < sys.rank; ++t) {
      if (y[t] == T(0)) continue;
      Rational entry = 0;
      if (s == t)
        entry = sys.symmetrizer[s];
      else if (pos[s] > pos[t])
        entry = sys.gram(s, t);
      acc += entry * Rational(x[s]) * Rational(y[t]);
    }
  }
  return acc;
}

template Rational symmetric_form<int>(const CoxeterSystem&, const std::vector<int>&,
                                      const std::vector<int>&);
template Rational symmetric_form<Rational>(const CoxeterSystem&, const std::vector<Rational>&,
                                           const std::vector<Rational>&);
template Rational euler_form<int>(const CoxeterSystem&, const CoxeterWord&,
                                  const std::vector<int>&, const std::vector<int>&);
template Rational euler_form<Rational>(const CoxeterSystem&, const CoxeterWord&,
                                       const std::vector<Rational>&,
                                       const std::vector<Rational>&);

}  // namespace coxchain
