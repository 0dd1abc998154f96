#pragma once

// The integrability system of d_phi = d_0 + sum_{alpha in half} phi_alpha ad(x_alpha).
//
// Squaring gives sum_g (psi_g + sum_{b+c=g} n(b,c) phi_b phi_c) ad(x_g) where
// psi_g = d_0 phi_g. The pairs (b,c) and (c,b) contribute the same term, so
// the engine keeps one term per unordered pair with coefficient n(b,c), b
// before c in the generator order. Writing the sum over ordered pairs
// instead doubles every quadratic coefficient; kOrderedSumFactor records that.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adelie/chevalley.hpp"
#include "adelie/formal_form.hpp"
#include "adelie/report.hpp"
#include "adelie/root_system.hpp"

namespace adelie {

enum class Half { Positive, Negative };

std::string to_string(Half h);
Half parse_half(const std::string& text);  // "positive" / "negative"; IllegalType otherwise

inline constexpr int kOrderedSumFactor = 2;

// Generator order: slot s holds phi/psi of root roots[s].
struct GeneratorOrder {
  std::vector<std::size_t> roots;     // slot -> root index
  std::vector<std::uint32_t> slot_of;  // root index -> slot, or kNone

  static constexpr std::uint32_t kNone = 0xffffffffu;

  // The roots of the half in the order of RootSystem::roots().
  static GeneratorOrder canonical(const RootSystem& rs, Half half);
  // Explicit order; must be a permutation of the half.
  static GeneratorOrder from_roots(const RootSystem& rs, Half half, std::vector<std::size_t> roots);

  std::vector<std::string> labels(const RootSystem& rs) const;
};

struct QuadraticTerm {
  Int n = 0;
  std::size_t beta = 0;   // root indices, beta precedes gamma in the order
  std::size_t gamma = 0;
  friend bool operator==(const QuadraticTerm&, const QuadraticTerm&) = default;
};

struct Equation {
  std::size_t root = 0;
  Int height = 0;
  std::vector<QuadraticTerm> terms;  // empty for height 1
};

struct ObstructionSystem {
  TypeSpec type;
  Half half = Half::Positive;
  GeneratorOrder order;
  std::vector<Equation> equations;  // in solve order: height ascending, then order slot
  int ordered_sum_factor = kOrderedSumFactor;

  const Equation& equation(std::size_t root) const;
  // psi_root + sum n phi_beta phi_gamma
  FormalForm form(std::size_t root) const;
  // sum n phi_beta phi_gamma
  FormalForm quadratic_part(std::size_t root) const;
};

// Coefficient of ad(x_g) in the square of d_phi, computed by applying the
// operator twice to every Chevalley basis vector. Throws CancellationFailure
// if anything outside span{ad(x_g) : g in half} survives.
std::map<std::size_t, FormalForm> expand_curvature(const ChevalleyConstants& c, Half half);
std::map<std::size_t, FormalForm> expand_curvature(const ChevalleyConstants& c, Half half,
                                                   const GeneratorOrder& order);

// Enumerates decompositions directly and asserts agreement with
// expand_curvature (ConstructionFailure otherwise).
ObstructionSystem build_system(const ChevalleyConstants& c, Half half);
ObstructionSystem build_system(const ChevalleyConstants& c, Half half, const GeneratorOrder& order);

// Equations in readable form: "dbar0 phi[a1+a2] = -1 phi[a1] ^ phi[a2]".
std::string format_system(const RootSystem& rs, const ObstructionSystem& system);

struct H2VanishVerdict {
  bool vanishes = false;
  std::string citation;
  std::vector<IntVector> witness;
};

// nullopt means the oracle cannot decide for that root.
using H2Oracle = std::function<std::optional<H2VanishVerdict>(const IntVector& root)>;

// H^2(G/B, L_alpha) from Borel-Weil-Bott.
H2Oracle flag_oracle(const RootSystem& rs);
// H^2(T*(G/B), L_alpha) from the cotangent verdict.
H2Oracle cotangent_oracle(const RootSystem& rs);

struct CertificateEntry {
  std::size_t root = 0;
  IntVector root_coords;
  Int height = 0;
  bool h2_vanishes = false;
  std::string citation;
  bool requires_nontrivial_class = false;  // height-1 roots: [phi] != 0 in H^1
  std::vector<IntVector> witness;
  friend bool operator==(const CertificateEntry&, const CertificateEntry&) = default;
};

struct SolvabilityCertificate {
  std::vector<CertificateEntry> entries;  // solve order
  bool complete = false;
  std::optional<IntVector> first_failure;
};

// IncompleteOracle if the oracle returns nullopt for any root of the half.
SolvabilityCertificate certify_solvability(const RootSystem& rs, const ObstructionSystem& system,
                                           const H2Oracle& oracle);

// Two parts, folded into one report:
//  residual: d of each quadratic part, with every psi_b replaced by minus the
//    quadratic part of its own (lower) equation, is identically zero;
//  compatibility: ad(x_g) for g in the half is a derivation of the bracket
//    defined by the constants, which is what makes d_phi respect [ , ].
// The A2 residual has no cubic terms at all, so the second part is what
// catches a flipped sign there.
Report check_bianchi(const ObstructionSystem& system, const ChevalleyConstants& c);

}  // namespace adelie
