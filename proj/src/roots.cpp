#include "coxchain/roots.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "coxchain/error.hpp"

namespace coxchain {

namespace {

bool is_positive(const std::vector<int>& v) {
  bool nonzero = false;
  for (int x : v) {
    if (x < 0) return false;
    if (x != 0) nonzero = true;
  }
  return nonzero;
}

bool is_negative(const std::vector<int>& v) {
  bool nonzero = false;
  for (int x : v) {
    if (x > 0) return false;
    if (x != 0) nonzero = true;
  }
  return nonzero;
}

std::vector<int> apply_reflection(const CoxeterSystem& sys, Gen s, const std::vector<int>& v) {
  int pairing = 0;
  for (int t = 0; t < sys.rank; ++t) pairing += sys.cartan[s][t] * v[t];
  std::vector<int> out = v;
  out[s] -= pairing;
  return out;
}

// Solves gamma = lambda a + mu b over the rationals. Returns the numerators
// (lambda*d, mu*d) and d, or nullopt if gamma is outside span(a, b).
struct SpanSolution {
  std::int64_t lambda_num, mu_num, denom;
};

std::optional<SpanSolution> solve_span(const std::vector<int>& a, const std::vector<int>& b,
                                       const std::vector<int>& g) {
  int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::int64_t d = std::int64_t(a[i]) * b[j] - std::int64_t(a[j]) * b[i];
      if (d == 0) continue;
      std::int64_t ln = std::int64_t(g[i]) * b[j] - std::int64_t(g[j]) * b[i];
      std::int64_t mn = std::int64_t(a[i]) * g[j] - std::int64_t(a[j]) * g[i];
      for (int k = 0; k < n; ++k)
        if (d * g[k] != ln * a[k] + mn * b[k]) return std::nullopt;
      return SpanSolution{ln, mn, d};
    }
  }
  return std::nullopt;
}

}  // namespace

RootSystem::RootSystem(CoxeterSystem sys) : sys_(std::move(sys)) {
  generate();
  build_reflections();
  build_subsystems();
  for (const auto& sub : subsystems_) {
    if (sub.roots.size() < 3) continue;
    for (PosIdx a : sub.roots)
      for (PosIdx b : sub.roots)
        if (a < b)
          for (PosIdx g : sub.roots)
            if (strictly_inside_cone(a, b, g)) cone_triples_.push_back({a, b, g});
  }
}

void RootSystem::generate() {
  const int n = sys_.rank;
  const std::size_t guard = 2u * n * n * 10;
  std::map<std::vector<int>, bool> seen;
  std::deque<std::vector<int>> queue;
  for (int s = 0; s < n; ++s) {
    std::vector<int> e(n, 0);
    e[s] = 1;
    seen[e] = true;
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (int s = 0; s < n; ++s) {
      auto r = apply_reflection(sys_, s, v);
      if (!is_positive(r) || seen.count(r)) continue;
      seen[r] = true;
      if (seen.size() > guard)
        throw VerificationFailure("root closure exceeded its guard; bad Cartan matrix?");
      queue.push_back(r);
    }
  }
  if (seen.size() > static_cast<std::size_t>(kMaxPositiveRoots))
    throw GuardExceeded(sys_.name() + " has " + std::to_string(seen.size()) +
                        " positive roots; the bitset limit is " +
                        std::to_string(kMaxPositiveRoots));
  for (auto& [v, _] : seen) roots_.push_back(v);
  // height ascending, then lexicographically descending so alpha_s gets index s
  std::sort(roots_.begin(), roots_.end(), [](const auto& x, const auto& y) {
    int hx = std::accumulate(x.begin(), x.end(), 0);
    int hy = std::accumulate(y.begin(), y.end(), 0);
    if (hx != hy) return hx < hy;
    return x > y;
  });
  for (PosIdx i = 0; i < size(); ++i) index_[roots_[i]] = i;
  simple_.resize(n);
  for (int s = 0; s < n; ++s) {
    std::vector<int> e(n, 0);
    e[s] = 1;
    simple_[s] = index_.at(e);
  }
  off_support_.assign(n, 0);
  for (int s = 0; s < n; ++s)
    for (PosIdx i = 0; i < size(); ++i)
      if (roots_[i][s] == 0) off_support_[s] |= root_bit(i);
}

void RootSystem::build_reflections() {
  reflection_.assign(sys_.rank, std::vector<SignedRoot>(size()));
  for (int s = 0; s < sys_.rank; ++s) {
    for (PosIdx i = 0; i < size(); ++i) {
      auto r = apply_reflection(sys_, s, roots_[i]);
      if (is_negative(r)) {
        for (int& x : r) x = -x;
        if (i != simple_[s])
          throw VerificationFailure("a simple reflection sent a non-simple root negative");
        reflection_[s][i] = SignedRoot{index_.at(r), true};
      } else {
        auto it = index_.find(r);
        if (it == index_.end()) throw VerificationFailure("root system not closed");
        reflection_[s][i] = SignedRoot{it->second, false};
      }
    }
  }
}

void RootSystem::build_subsystems() {
  const int N = size();
  pair_subsystem_.assign(N, std::vector<int>(N, -1));
  containing_.assign(N, {});
  for (PosIdx a = 0; a < N; ++a) {
    for (PosIdx b = a + 1; b < N; ++b) {
      if (pair_subsystem_[a][b] >= 0) continue;
      RankTwoSubsystem sub;
      sub.id = static_cast<int>(subsystems_.size());
      for (PosIdx g = 0; g < N; ++g)
        if (g == a || g == b || solve_span(roots_[a], roots_[b], roots_[g])) sub.roots.push_back(g);
      for (PosIdx x : sub.roots) {
        sub.mask |= root_bit(x);
        containing_[x].push_back(sub.id);
        for (PosIdx y : sub.roots)
          if (x != y) {
            if (pair_subsystem_[x][y] >= 0)
              throw VerificationFailure("pair of roots lies in two subsystems");
            pair_subsystem_[x][y] = sub.id;
          }
      }
      if (sub.roots.size() == 2) {
        if (symmetric_form(sys_, roots_[sub.roots[0]], roots_[sub.roots[1]]) != Rational(0))
          throw VerificationFailure("two-root subsystem with non-orthogonal roots");
        sub.commutative = true;
      }
      subsystems_.push_back(std::move(sub));
    }
  }
  key_bit_.assign(subsystems_.size(), -1);
  for (const auto& sub : subsystems_)
    if (!sub.commutative) {
      key_bit_[sub.id] = static_cast<int>(noncommutative_.size());
      noncommutative_.push_back(sub.id);
    }
}

RootMask RootSystem::all_mask() const {
  return size() == 64 ? ~RootMask(0) : (root_bit(size()) - 1);
}

int RootSystem::height(PosIdx i) const {
  return std::accumulate(roots_[i].begin(), roots_[i].end(), 0);
}

std::optional<PosIdx> RootSystem::find(const std::vector<int>& coeffs) const {
  auto it = index_.find(coeffs);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::strictly_inside_cone(PosIdx a, PosIdx b, PosIdx gamma) const {
  if (gamma == a || gamma == b || a == b) return false;
  auto sol = solve_span(roots_[a], roots_[b], roots_[gamma]);
  if (!sol) return false;
  auto same_sign = [&](std::int64_t num) {
    return num != 0 && ((num > 0) == (sol->denom > 0));
  };
  return same_sign(sol->lambda_num) && same_sign(sol->mu_num);
}

std::vector<PosIdx> order_subsystem(const RootSystem& rs, const CoxeterWord& c,
                                    const RankTwoSubsystem& sub) {
  if (sub.commutative)
    throw InvalidArgument("commutative subsystems carry no canonical order");
  const auto& sys = rs.system();
  std::vector<PosIdx> out = sub.roots;
  auto skew = [&](PosIdx x, PosIdx y) { return skew_form(sys, c, rs.coeffs(x), rs.coeffs(y)); };
  std::sort(out.begin(), out.end(), [&](PosIdx x, PosIdx y) { return skew(x, y) > Rational(0); });
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (!(skew(out[i], out[j]) > Rational(0)))
        throw VerificationFailure("skew form does not totally order a rank-two subsystem");
  return out;
}

}  // namespace coxchain
