#pragma once

// Chevalley basis {h_1..h_r, x_alpha} of a simply-laced Lie algebra with
// integer structure constants [x_a, x_b] = n(a,b) x_{a+b}.
//
// Sign convention: n(a,b) = eps(a,b) * s(a) * s(b) * s(a+b) where eps is the
// bimultiplicative sign on the root lattice fixed by
//   eps(a_i, a_i) = -1,  eps(a_i, a_j) = -1 (i < j adjacent), +1 otherwise,
// and s(g) = +1 for positive g, -1 for negative g. The s factors rescale
// x_{-a} so that [x_a, x_{-a}] = +h_a.
//
// Ordered basis: index i < r is h_{i+1}; index r + k is x_{roots()[k]}.

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "adelie/exact.hpp"
#include "adelie/report.hpp"
#include "adelie/root_system.hpp"

namespace adelie {

struct Term {
  std::uint32_t index = 0;
  Int coeff = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

class ChevalleyConstants {
 public:
  // Builds and verifies (support, antisymmetry, cocycle). Throws
  // ConstructionFailure when any postcondition fails.
  static ChevalleyConstants build(std::shared_ptr<const RootSystem> rs);

  const RootSystem& system() const { return *rs_; }
  std::shared_ptr<const RootSystem> system_ptr() const { return rs_; }

  // Root indices into system().roots().
  int n(std::size_t a, std::size_t b) const { return table_[a * rs_->num_roots() + b]; }
  int n(const IntVector& a, const IntVector& b) const;

  // Expansion of h_alpha over h_1..h_r (the simple-root coordinates).
  const IntVector& h_coeffs(std::size_t a) const { return rs_->roots()[a]; }

  // Copy with the single ordered entry n(a,b) negated. Used to check that
  // the verifiers notice corrupted tables; never verified.
  ChevalleyConstants mutated(std::size_t a, std::size_t b) const;

  // One line per nonzero entry: "[a] | [b] | sign".
  std::string dump() const;

 private:
  ChevalleyConstants() = default;

  std::shared_ptr<const RootSystem> rs_;
  std::vector<std::int8_t> table_;
};

// Bracket of basis elements [b_i, b_j] as sparse terms.
class StructureTable {
 public:
  explicit StructureTable(const ChevalleyConstants& c);

  std::size_t dimension() const { return dim_; }
  std::span<const Term> bracket(std::size_t i, std::size_t j) const {
    const auto& v = terms_[i * dim_ + j];
    return {v.data(), v.size()};
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::vector<Term>> terms_;
};

struct LieElement {
  TypeSpec type;
  IntVector cartan_part;                 // coefficients of h_1..h_r
  std::map<std::size_t, Int> root_part;  // root index -> coefficient of x_alpha

  static LieElement zero(const RootSystem& rs);
  static LieElement h(const RootSystem& rs, std::size_t i);
  static LieElement x(const RootSystem& rs, std::size_t root_index);
  static LieElement basis(const RootSystem& rs, std::size_t basis_index);
  static LieElement from_dense(const RootSystem& rs, const IntVector& coeffs);

  IntVector dense(const RootSystem& rs) const;
  bool is_zero() const;

  LieElement& operator+=(const LieElement& o);
  LieElement& operator*=(Int s);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a += b * -1; }
  friend LieElement operator*(LieElement a, Int s) { return a *= s; }
  friend bool operator==(const LieElement&, const LieElement&) = default;

 private:
  void prune();
};

LieElement bracket(const LieElement& x, const LieElement& y, const ChevalleyConstants& c);

// Matrix of ad(x) in the ordered basis: column j holds [x, b_j].
IntMatrix adjoint_matrix(const LieElement& x, const ChevalleyConstants& c);

struct ChevalleyVerifyOptions {
  bool jacobi_full = false;              // force exhaustive Jacobi regardless of size
  std::size_t jacobi_exhaustive_max_dim = 133;
  std::size_t jacobi_samples = 1'000'000;
  std::size_t ad_pairs = 10'000;
  std::uint64_t seed = 1;
};

// Support/antisymmetry, cocycle identity, Jacobi on basis triples and the
// ad-homomorphism property. One report per check.
std::vector<Report> verify_chevalley(const ChevalleyConstants& c, const ChevalleyVerifyOptions& opts = {});

Report verify_support(const ChevalleyConstants& c);
Report verify_cocycle(const ChevalleyConstants& c);
Report verify_jacobi(const ChevalleyConstants& c, const ChevalleyVerifyOptions& opts = {});
Report verify_ad_homomorphism(const ChevalleyConstants& c, std::size_t pairs, std::uint64_t seed);

}  // namespace adelie
