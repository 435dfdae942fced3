#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "coxchain/cartan.hpp"

namespace coxchain {

using PosIdx = int;
// Sets of positive roots. Capping at 64 keeps every catalog type up to rank 8.
using RootMask = std::uint64_t;
inline constexpr int kMaxPositiveRoots = 64;

inline RootMask root_bit(PosIdx i) { return RootMask(1) << i; }

struct SignedRoot {
  PosIdx index = 0;
  bool negative = false;
  bool operator==(const SignedRoot&) const = default;
};

struct RankTwoSubsystem {
  int id = 0;
  std::vector<PosIdx> roots;  // ascending PosIdx
  bool commutative = false;
  RootMask mask = 0;
};

class RootSystem {
 public:
  explicit RootSystem(CoxeterSystem sys);

  const CoxeterSystem& system() const { return sys_; }
  int rank() const { return sys_.rank; }
  int size() const { return static_cast<int>(roots_.size()); }
  RootMask all_mask() const;

  const std::vector<int>& coeffs(PosIdx i) const { return roots_[i]; }
  int height(PosIdx i) const;
  PosIdx simple(Gen s) const { return simple_[s]; }
  std::optional<PosIdx> find(const std::vector<int>& coeffs) const;

  // s(beta); negative only when beta is alpha_s
  SignedRoot reflect(Gen s, PosIdx beta) const { return reflection_[s][beta]; }

  const std::vector<RankTwoSubsystem>& subsystems() const { return subsystems_; }
  // ids of non-commutative subsystems; position in this list is the key bit
  const std::vector<int>& noncommutative() const { return noncommutative_; }
  int key_bit(int subsystem_id) const { return key_bit_[subsystem_id]; }
  int subsystem_of(PosIdx a, PosIdx b) const { return pair_subsystem_[a][b]; }
  const std::vector<int>& subsystems_containing(PosIdx beta) const { return containing_[beta]; }

  // Roots whose support avoids generator s.
  RootMask off_support_mask(Gen s) const { return off_support_[s]; }

  // gamma = lambda a + mu b with lambda, mu > 0
  bool strictly_inside_cone(PosIdx a, PosIdx b, PosIdx gamma) const;
  // every (a, b, gamma) with a < b and gamma strictly inside their cone
  const std::vector<std::array<PosIdx, 3>>& cone_triples() const { return cone_triples_; }

 private:
  void generate();
  void build_reflections();
  void build_subsystems();

  CoxeterSystem sys_;
  std::vector<std::vector<int>> roots_;
  std::map<std::vector<int>, PosIdx> index_;
  std::vector<PosIdx> simple_;
  std::vector<std::vector<SignedRoot>> reflection_;
  std::vector<RankTwoSubsystem> subsystems_;
  std::vector<int> noncommutative_;
  std::vector<int> key_bit_;
  std::vector<std::vector<int>> pair_subsystem_;
  std::vector<std::vector<int>> containing_;
  std::vector<RootMask> off_support_;
  std::vector<std::array<PosIdx, 3>> cone_triples_;
};

// Roots of a non-commutative subsystem; the skew form of c is positive on
// every earlier/later pair.
std::vector<PosIdx> order_subsystem(const RootSystem& rs, const CoxeterWord& c,
                                    const RankTwoSubsystem& sub);

}  // namespace coxchain
