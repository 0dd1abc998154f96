#pragma once

// Exact graded-commutative algebra on odd generators phi_k (degree 1) and
// even generators psi_k (degree 2), with the derivation d(phi_k) = psi_k.
// Generators are identified by a slot number; smaller slots come first in
// the canonical order.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "adelie/exact.hpp"

namespace adelie {

struct Monomial {
  std::vector<std::uint32_t> odd;   // strictly increasing
  std::vector<std::uint32_t> even;  // nondecreasing (a multiset)

  std::size_t degree() const { return odd.size() + 2 * even.size(); }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class FormalForm {
 public:
  FormalForm() = default;

  static FormalForm constant(Int c);
  static FormalForm phi(std::uint32_t slot);
  static FormalForm psi(std::uint32_t slot);

  const std::map<Monomial, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Adds c * m, dropping the entry if it cancels.
  void add_term(const Monomial& m, Int c);

  FormalForm& operator+=(const FormalForm& o);
  FormalForm& operator-=(const FormalForm& o);
  FormalForm& operator*=(Int s);
  friend FormalForm operator+(FormalForm a, const FormalForm& b) { return a += b; }
  friend FormalForm operator-(FormalForm a, const FormalForm& b) { return a -= b; }
  friend FormalForm operator*(FormalForm a, Int s) { return a *= s; }
  friend FormalForm operator*(const FormalForm& a, const FormalForm& b);
  friend bool operator==(const FormalForm&, const FormalForm&) = default;

  // The derivation: phi -> psi, psi -> 0, graded Leibniz rule.
  FormalForm d() const;

  // Replaces each psi_k by replacement[k] where present. Replacements must be
  // of even degree so the result stays well defined.
  FormalForm substitute_psi(const std::map<std::uint32_t, FormalForm>& replacement) const;

  // Human readable, e.g. "psi[c] + 2 phi[a] ^ phi[b]"; names[slot] labels a slot.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::map<Monomial, Int> terms_;
};

// Product of two monomials: the merged monomial and the sign of the
// permutation that sorts the odd parts, or sign 0 if an odd generator repeats.
int multiply_monomials(const Monomial& a, const Monomial& b, Monomial& out);

}  // namespace adelie
