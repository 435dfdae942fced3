#pragma once

// Reference computations that share no code with the library beyond the
// element/edge data they are asked to judge.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "coxchain/weak_order.hpp"

namespace oracle {

inline std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

inline std::uint64_t binom(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Reduced words of the reversal permutation of {0..n}: every word of length
// n(n+1)/2 in adjacent swaps that only ever swaps an increasing pair.
inline std::vector<std::vector<int>> longest_words(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(n + 1), word;
  std::iota(p.begin(), p.end(), 0);
  const int len = n * (n + 1) / 2;
  std::function<void()> rec = [&] {
    if (static_cast<int>(word.size()) == len) {
      out.push_back(word);
      return;
    }
    for (int i = 0; i < n; ++i)
      if (p[i] < p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        word.push_back(i);
        rec();
        word.pop_back();
        std::swap(p[i], p[i + 1]);
      }
  };
  rec();
  return out;
}

// Classes under swapping adjacent letters that differ by at least two,
// found by flood fill over explicit words.
inline int commutation_class_count(const std::vector<std::vector<int>>& words) {
  std::set<std::vector<int>> unseen(words.begin(), words.end());
  int classes = 0;
  while (!unseen.empty()) {
    ++classes;
    std::vector<std::vector<int>> stack{*unseen.begin()};
    unseen.erase(unseen.begin());
    while (!stack.empty()) {
      auto w = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (std::abs(w[i] - w[i + 1]) >= 2) {
          std::swap(w[i], w[i + 1]);
          if (unseen.erase(w)) stack.push_back(w);
          std::swap(w[i], w[i + 1]);
        }
    }
  }
  return classes;
}

// All reduced words of w read off the weak order edges.
inline std::vector<std::vector<int>> reduced_words(const coxchain::WeakOrder& wo, int w) {
  if (w == wo.bottom()) return {{}};
  std::vector<std::vector<int>> out;
  for (const auto& e : wo.down_edges(w)) {
    int u = e.target;
    int s = -1;
    for (int t = 0; t < wo.roots().rank(); ++t)
      if (wo.right_multiply(u, t) == w) s = t;
    for (auto word : reduced_words(wo, u)) {
      word.push_back(s);
      out.push_back(word);
    }
  }
  return out;
}

// Sortability straight from the definition: among all reduced words take
// the one whose leftmost embedding into c c c ... is lexicographically
// first, then test that the passes through c use shrinking letter sets.
inline bool sortable_by_definition(const coxchain::WeakOrder& wo, const std::vector<int>& c, int w) {
  const int r = static_cast<int>(c.size());
  std::vector<int> slot(r);
  for (int i = 0; i < r; ++i) slot[c[i]] = i;
  std::vector<long> best;
  for (const auto& word : reduced_words(wo, w)) {
    std::vector<long> pos;
    long at = -1;
    for (int s : word) {
      long next = (at + 1) / r * r + slot[s];
      if (next <= at) next += r;
      pos.push_back(at = next);
    }
    if (best.empty() || pos < best) best = pos;
  }
  std::map<long, std::set<int>> passes;
  for (long p : best) passes[p / r].insert(c[p % r]);
  long prev_index = -1;
  std::set<int> prev;
  for (auto& [k, letters] : passes) {
    if (k != prev_index + 1 && prev_index >= 0) return false;
    if (prev_index < 0 && k != 0) return false;
    if (prev_index >= 0 && !std::includes(prev.begin(), prev.end(), letters.begin(), letters.end()))
      return false;
    prev = letters;
    prev_index = k;
  }
  return true;
}

// Closed under positive combinations inside the span of any two members,
// and so is the complement.
inline bool biclosed_by_brute_force(const coxchain::RootSystem& rs, std::uint64_t set) {
  auto closed = [&](std::uint64_t s) {
    for (int a = 0; a < rs.size(); ++a)
      for (int b = 0; b < rs.size(); ++b) {
        if (a == b || !(s >> a & 1) || !(s >> b & 1)) continue;
        const auto& x = rs.coeffs(a);
        const auto& y = rs.coeffs(b);
        for (int g = 0; g < rs.size(); ++g) {
          if (s >> g & 1) continue;
          const auto& z = rs.coeffs(g);
          // z = p x + q y with p, q > 0, tried over small integer ratios
          bool inside = false;
          for (int p = 1; p <= 3 && !inside; ++p)
            for (int q = 1; q <= 3 && !inside; ++q)
              for (int d = 1; d <= 3 && !inside; ++d) {
                bool ok = true;
                for (int t = 0; t < rs.rank(); ++t)
                  if (d * z[t] != p * x[t] + q * y[t]) ok = false;
                inside = ok;
              }
          if (inside) return false;
        }
      }
    return true;
  };
  return closed(set) && closed(rs.all_mask() & ~set);
}

}  // namespace oracle
