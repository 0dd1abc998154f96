#include "adelie/surface.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "adelie/error.hpp"
#include "adelie/format.hpp"

namespace adelie::surface {

ResolutionLattice resolution_lattice(const RootSystem& rs) {
  ResolutionLattice lat;
  lat.type = rs.type();
  lat.rank = rs.r();
  lat.intersection = -rs.cartan();
  for (std::size_t i = 0; i < lat.rank; ++i) {
    lat.labels.push_back("C" + std::to_string(i + 1));
    for (std::size_t j = 0; j < lat.rank; ++j) {
      const Int v = lat.intersection(i, j);
      const bool ok = i == j ? v == -2 : (v == 0 || v == 1);
      if (!ok) throw Error(ErrorCode::ConstructionFailure, "unexpected intersection number " + std::to_string(v));
    }
  }
  for (Int minor : leading_principal_minors(-lat.intersection))
    if (minor <= 0) throw Error(ErrorCode::ConstructionFailure, "intersection form is not negative definite");
  return lat;
}

bool DivisorClass::effective() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](Int c) { return c >= 0; });
}

Int intersect(const ResolutionLattice& lattice, const DivisorClass& a, const DivisorClass& b) {
  Int s = 0;
  for (std::size_t i = 0; i < lattice.rank; ++i)
    for (std::size_t j = 0; j < lattice.rank; ++j) s += a.coeffs[i] * lattice.intersection(i, j) * b.coeffs[j];
  return s;
}

DivisorClass root_to_divisor(const RootSystem& rs, const ResolutionLattice& lattice, const IntVector& root) {
  if (!rs.is_root(root)) throw Error(ErrorCode::NotARoot, format_vector(root) + " is not a root");
  const IntMatrix& a = rs.cartan();
  std::vector<Rational> rhs(lattice.rank, Rational(0));
  for (std::size_t j = 0; j < lattice.rank; ++j) {
    Int s = 0;
    for (std::size_t i = 0; i < lattice.rank; ++i) s -= root[i] * a(i, j);
    rhs[j] = s;
  }
  auto m = solve_row(lattice.intersection, rhs);
  if (!m) throw Error(ErrorCode::SingularSystem, "intersection matrix is singular");
  auto integral = to_integers(*m);
  if (!integral || *integral != root)
    throw Error(ErrorCode::ConstructionFailure, "restriction system for " + format_vector(root) + " has solution other than n");
  return DivisorClass{*integral};
}

std::vector<DivisorClass> minus_two_classes(const ResolutionLattice& lattice) {
  const std::size_t n = lattice.rank;
  auto ldl = ldl_decompose(-lattice.intersection);
  if (!ldl) throw Error(ErrorCode::ConstructionFailure, "intersection form is not negative definite");
  // x^T Q x = sum_k d_k (x_k + sum_{i>k} L[i][k] x_i)^2: fix x_{n-1} first.
  std::vector<DivisorClass> out;
  IntVector x(n, 0);
  const Rational target(2);
  std::function<void(std::size_t, Rational)> descend = [&](std::size_t k1, Rational used) {
    if (k1 == 0) {
      if (used == target) out.push_back(DivisorClass{x});
      return;
    }
    const std::size_t k = k1 - 1;
    Rational centre(0);
    for (std::size_t i = k + 1; i < n; ++i) centre += ldl->lower[i][k] * Rational(x[i]);
    const Rational room = target - used;
    const Rational& dk = ldl->diag[k];
    // Candidate window from floating point, widened; membership is exact.
    const double c = static_cast<double>(centre.num()) / static_cast<double>(centre.den());
    const double w = std::sqrt((static_cast<double>(room.num()) / room.den()) / (static_cast<double>(dk.num()) / dk.den()));
    const Int lo = static_cast<Int>(std::floor(-c - w)) - 1;
    const Int hi = static_cast<Int>(std::ceil(-c + w)) + 1;
    for (Int v = lo; v <= hi; ++v) {
      const Rational t = Rational(v) + centre;
      const Rational cost = dk * t * t;
      if (cost > room) continue;
      x[k] = v;
      descend(k, used + cost);
    }
    x[k] = 0;
  };
  descend(n, Rational(0));
  std::sort(out.begin(), out.end());
  return out;
}

BundleDecomposition bundle_decomposition(const RootSystem& rs, const ResolutionLattice& lattice) {
  BundleDecomposition b;
  b.trivial_rank = lattice.rank;
  for (const auto& root : rs.roots()) b.divisors.push_back(root_to_divisor(rs, lattice, root));
  const auto found = minus_two_classes(lattice);
  b.enumerated = found.size();
  auto image = b.divisors;
  std::sort(image.begin(), image.end());
  if (image != found)
    throw Error(ErrorCode::ConstructionFailure, "(-2)-classes (" + std::to_string(found.size()) +
                                                    ") differ from the root image (" + std::to_string(image.size()) + ")");
  b.total_rank = b.trivial_rank + b.divisors.size();
  return b;
}

H2VanishVerdict surface_h2_oracle(const ResolutionLattice& lattice, const DivisorClass& d) {
  if (d.coeffs.size() != lattice.rank || self_intersection(lattice, d) != -2)
    throw Error(ErrorCode::NotARootClass, format_vector(d.coeffs) + " is not a (-2)-class");
  DivisorClass current = d;
  bool negated = false;
  if (!current.effective()) {
    for (Int& c : current.coeffs) c = -c;
    negated = true;
    if (!current.effective())
      throw Error(ErrorCode::NotARootClass, format_vector(d.coeffs) + " is neither effective nor anti-effective");
  }
  H2VanishVerdict v;
  v.witness.push_back(current.coeffs);
  auto height = [](const DivisorClass& x) {
    Int h = 0;
    for (Int c : x.coeffs) h += c;
    return h;
  };
  while (height(current) > 1) {
    bool stepped = false;
    for (std::size_t i = 0; i < lattice.rank && !stepped; ++i) {
      DivisorClass unit{IntVector(lattice.rank, 0)};
      unit.coeffs[i] = 1;
      if (intersect(lattice, current, unit) != -1) continue;
      DivisorClass next = current;
      --next.coeffs[i];
      if (!next.effective() || self_intersection(lattice, next) != -2) continue;
      current = std::move(next);
      v.witness.push_back(current.coeffs);
      stepped = true;
    }
    if (!stepped)
      throw Error(ErrorCode::ConstructionFailure, "no induction step below " + format_vector(current.coeffs));
  }
  std::size_t base = 0;
  while (current.coeffs[base] == 0) ++base;
  v.vanishes = true;
  v.citation = std::string("surface:induction") + (negated ? " via negation" : "") + " from O(" +
               lattice.labels[base] + ")";
  return v;
}

H2Oracle surface_oracle(const RootSystem& rs, const ResolutionLattice& lattice) {
  return [&rs, &lattice](const IntVector& root) -> std::optional<H2VanishVerdict> {
    return surface_h2_oracle(lattice, root_to_divisor(rs, lattice, root));
  };
}

IntMatrix restriction_matrix(const RootSystem& rs, const ResolutionLattice& lattice) {
  IntMatrix m(rs.num_roots(), lattice.rank);
  for (std::size_t k = 0; k < rs.num_roots(); ++k) {
    const DivisorClass d = root_to_divisor(rs, lattice, rs.roots()[k]);
    for (std::size_t i = 0; i < lattice.rank; ++i) {
      DivisorClass unit{IntVector(lattice.rank, 0)};
      unit.coeffs[i] = 1;
      m(k, i) = intersect(lattice, d, unit);
    }
  }
  return m;
}

Report verify_lemma15(const RootSystem& rs, const ResolutionLattice& lattice) {
  Report report("lemma15");
  std::vector<DivisorClass> divisors;
  for (const auto& root : rs.roots()) {
    ++report.checked;
    try {
      divisors.push_back(root_to_divisor(rs, lattice, root));
    } catch (const Error& e) {
      report.fail(e.what());
      return report;
    }
  }
  for (std::size_t a = 0; a < divisors.size(); ++a)
    for (std::size_t b = 0; b < divisors.size(); ++b) {
      ++report.checked;
      if (intersect(lattice, divisors[a], divisors[b]) != -rs.root_pairing(rs.roots()[a], rs.roots()[b]))
        report.fail("isometry fails for " + format_vector(rs.roots()[a]) + ", " + format_vector(rs.roots()[b]));
    }
  return report;
}

}  // namespace adelie::surface
