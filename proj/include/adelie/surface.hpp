#pragma once

// Minimal resolution of a rational double point: the exceptional curves
// C_1..C_r form an ADE configuration of (-2)-curves whose intersection form
// is minus the Cartan matrix. A root alpha = sum n_i alpha_i corresponds to
// the divisor D_alpha = sum n_i C_i.

#include <cstddef>
#include <string>
#include <vector>

#include "adelie/exact.hpp"
#include "adelie/obstruction.hpp"
#include "adelie/report.hpp"
#include "adelie/root_system.hpp"

namespace adelie::surface {

struct ResolutionLattice {
  TypeSpec type;
  std::size_t rank = 0;
  IntMatrix intersection;           // [C_i . C_j]
  std::vector<std::string> labels;  // "C1", ..., "Cr"
};

// Asserts the diagonal is -2, off-diagonal entries are 0 or 1 and the form
// is negative definite (ConstructionFailure otherwise).
ResolutionLattice resolution_lattice(const RootSystem& rs);

struct DivisorClass {
  IntVector coeffs;  // coefficients of C_1..C_r
  bool effective() const;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
};

Int intersect(const ResolutionLattice& lattice, const DivisorClass& a, const DivisorClass& b);
inline Int self_intersection(const ResolutionLattice& lattice, const DivisorClass& d) {
  return intersect(lattice, d, d);
}

// Solves m . [C_i . C_j] = -n . cartan exactly and checks m = n. NotARoot for
// a non-root, SingularSystem if the intersection matrix were singular.
DivisorClass root_to_divisor(const RootSystem& rs, const ResolutionLattice& lattice, const IntVector& root);

// All D with D^2 = -2, by exact Fincke-Pohst enumeration on the positive
// definite form -[C_i . C_j]; sorted ascending.
std::vector<DivisorClass> minus_two_classes(const ResolutionLattice& lattice);

struct BundleDecomposition {
  std::size_t trivial_rank = 0;         // the O^{r} summand
  std::vector<DivisorClass> divisors;   // in RootSystem::roots() order
  std::size_t total_rank = 0;
  std::size_t enumerated = 0;           // |{D : D^2 = -2}|
};

// Throws ConstructionFailure unless the enumeration equals the image of
// root_to_divisor element for element.
BundleDecomposition bundle_decomposition(const RootSystem& rs, const ResolutionLattice& lattice);

// H^2(O(D)) = 0 for an effective root class by induction on height: the
// base case is O(C_i); from D one steps to D - C_i for some C_i with
// D . C_i = -1 and D - C_i still an effective root class. A non-effective
// root class is routed through -D. NotARootClass unless D^2 = -2 and D or -D
// is effective. The witness is the chain of classes, ending at some C_i.
H2VanishVerdict surface_h2_oracle(const ResolutionLattice& lattice, const DivisorClass& d);

// Oracle for certify_solvability: alpha -> surface_h2_oracle(D_alpha).
H2Oracle surface_oracle(const RootSystem& rs, const ResolutionLattice& lattice);

// Row per root in RootSystem::roots() order, column i: D_alpha . C_i.
IntMatrix restriction_matrix(const RootSystem& rs, const ResolutionLattice& lattice);

// m = n for every root and D_alpha . D_beta = -(alpha, beta) for all pairs.
Report verify_lemma15(const RootSystem& rs, const ResolutionLattice& lattice);

}  // namespace adelie::surface
