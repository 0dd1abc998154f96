#pragma once

// Line-bundle cohomology on the full flag variety G/B (Borel-Weil-Bott).
// Weights are accepted in either basis and reported in fundamental-weight
// coordinates.

#include <cstddef>
#include <map>
#include <vector>

#include "adelie/bigint.hpp"
#include "adelie/report.hpp"
#include "adelie/root_system.hpp"

namespace adelie::flag {

struct WeylSort {
  LatticeVector dominant;
  // Simple reflections (0-based) in the order they were applied.
  std::vector<std::size_t> word;
};

enum class Status { AllVanish, Concentrated };

struct CohomologyVerdict {
  Status status = Status::AllVanish;
  std::size_t degree = 0;
  LatticeVector highest_weight;  // dominant, weight basis
  BigInt dimension = 0;
  std::vector<std::size_t> word;

  // (-1)^degree * dimension, or 0 when everything vanishes.
  BigInt euler_characteristic() const;
  bool vanishes_in_degree(std::size_t i) const { return status == Status::AllVanish || degree != i; }
};

bool is_singular(const RootSystem& rs, const LatticeVector& mu);

// Number of positive roots pairing negatively with mu.
std::size_t index(const RootSystem& rs, const LatticeVector& mu);

// Applies s_i at the first negative coordinate until mu is dominant.
WeylSort dominant_conjugate(const RootSystem& rs, const LatticeVector& mu);

bool is_dominant(const RootSystem& rs, const LatticeVector& mu);

// Weyl dimension formula, exact. NotDominant for non-dominant input.
BigInt weyl_dim(const RootSystem& rs, const LatticeVector& mu);

CohomologyVerdict bwb(const RootSystem& rs, const LatticeVector& lambda);

// Every root: H^{>=2}(L_alpha) = 0, and H^1 != 0 exactly for -alpha_i with
// dimension 1.
Report verify_prop2(const RootSystem& rs);

// ind(alpha + rho) <= 1 whenever alpha + rho is regular, together with the
// weight-coordinate ranges used in its proof.
Report verify_lemma3(const RootSystem& rs);

// Degree of L_lambda on the Schubert line C_i = P_i/B, i.e. (lambda, alpha_i).
Int schubert_restriction_degree(const RootSystem& rs, const LatticeVector& lambda, std::size_t i);

struct TrivialityVerdict {
  bool trivial = true;
  std::vector<std::size_t> failing;  // simple indices whose class vanishes
};

// The bundle is trivial iff the class attached to every simple root is
// nonzero. The map must cover every simple index.
TrivialityVerdict triviality_criterion(const RootSystem& rs, const std::map<std::size_t, bool>& nonvanishing);

}  // namespace adelie::flag
