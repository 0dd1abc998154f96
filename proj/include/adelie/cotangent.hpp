#pragma once

// Vanishing and structure of H^i(T*(G/B), L_lambda) through the
// combinatorial dimension Cht(lambda) of the dominant interval
// [lambda*, lambda+] in the dominance order.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "adelie/bigint.hpp"
#include "adelie/report.hpp"
#include "adelie/root_system.hpp"

namespace adelie::cotangent {

// mu - lambda is a nonnegative integer combination of simple roots.
bool dominance_leq(const RootSystem& rs, const LatticeVector& lambda, const LatticeVector& mu);

// Dominant Weyl conjugate (no rho shift).
LatticeVector lambda_plus(const RootSystem& rs, const LatticeVector& lambda);

// All dominant mu with lambda <= mu <= lambda+, sorted by height above lambda
// and then lexicographically in the simple-root coordinates c of mu - lambda.
// Found by a pruned exhaustive search over the box 0 <= c <= lambda+ - lambda.
std::vector<LatticeVector> dominant_interval(const RootSystem& rs, const LatticeVector& lambda);

// Unique dominance-minimal element of dominant_interval; NonUniqueMinimal if
// the minimum is not unique.
LatticeVector lambda_star(const RootSystem& rs, const LatticeVector& lambda);

struct ChtReport {
  LatticeVector lambda;
  LatticeVector lambda_plus;
  LatticeVector lambda_star;
  std::size_t cht = 0;
  // lambda* = chain[0] < chain[1] < ... < chain[cht] = lambda+
  std::vector<LatticeVector> chain_witness;
  Int shift = 0;  // ht(lambda+ - lambda*)
  std::size_t interval_size = 0;
};

ChtReport cht(const RootSystem& rs, const LatticeVector& lambda);

// Cht(lambda) = 0 iff (lambda, beta) >= -1 for all positive beta, checked on
// the coordinate ball of the given radius; and Cht(lambda + mu) = 0 for every
// fundamental mu whenever Cht(lambda) = 0. At most sample_budget weights
// (0: the whole ball).
Report verify_cht_lemma(const RootSystem& rs, std::size_t sample_budget, Int radius = 2);

// Descent lambda -> lambda + alpha_i with (lambda, alpha_i) = -1 that stays in
// the negative roots, repeated down to a negative simple root.
struct DescentChain {
  IntVector root;                    // simple-root coordinates
  std::vector<std::size_t> simples;  // 0-based simple roots added, in order
  std::vector<IntVector> path;       // root, ..., negative simple root
};

// Throws NotARoot when the argument is not a negative root.
DescentChain descent_chain(const RootSystem& rs, const IntVector& negative_root);

Report verify_prop11_induction(const RootSystem& rs, std::vector<DescentChain>* chains = nullptr);

struct H1Structure {
  LatticeVector lambda_star;
  LatticeVector lambda_plus;
  Int shift = 0;
};

struct CotangentVerdict {
  LatticeVector lambda;
  std::size_t cht = 0;
  bool h_positive_vanish = false;        // H^i = 0 for all i >= 1
  std::optional<H1Structure> h1_structure;  // when cht = 1
  std::size_t upper_vanishing_degree = 0;   // H^i = 0 for all i > this
  std::optional<bool> h2_vanishes;
  std::string h2_route;                  // "negative-root-induction", "cht-bound" or "undetermined"
  std::vector<IntVector> h2_chain;
};

CotangentVerdict cotangent_verdict(const RootSystem& rs, const LatticeVector& lambda);

struct EulerOptions {
  std::size_t max_degree = 4;
  std::size_t multiset_cap = 1'000'000;
};

// Sum over multisets M of j positive roots of chi(G/B, L_{lambda + sum M}).
BigInt euler_characteristic_graded(const RootSystem& rs, const LatticeVector& lambda, std::size_t j,
                                   const EulerOptions& opts = {});

}  // namespace adelie::cotangent
