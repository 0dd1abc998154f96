#include "adelie/flag_cohomology.hpp"

#include "adelie/error.hpp"
#include "adelie/format.hpp"

namespace adelie::flag {
namespace {

Int pair_with_root(const IntVector& weight, const IntVector& root) {
  Int s = 0;
  for (std::size_t i = 0; i < weight.size(); ++i) s += weight[i] * root[i];
  return s;
}

IntVector plus_rho(IntVector w) {
  for (auto& c : w) ++c;
  return w;
}

}  // namespace

BigInt CohomologyVerdict::euler_characteristic() const {
  if (status == Status::AllVanish) return 0;
  return degree % 2 == 0 ? dimension : BigInt(-dimension);
}

bool is_singular(const RootSystem& rs, const LatticeVector& mu) {
  const IntVector w = rs.weight_coords(mu);
  for (const auto& alpha : rs.positive_roots())
    if (pair_with_root(w, alpha) == 0) return true;
  return false;
}

std::size_t index(const RootSystem& rs, const LatticeVector& mu) {
  const IntVector w = rs.weight_coords(mu);
  std::size_t count = 0;
  for (const auto& alpha : rs.positive_roots())
    if (pair_with_root(w, alpha) < 0) ++count;
  return count;
}

bool is_dominant(const RootSystem& rs, const LatticeVector& mu) {
  for (Int c : rs.weight_coords(mu))
    if (c < 0) return false;
  return true;
}

WeylSort dominant_conjugate(const RootSystem& rs, const LatticeVector& mu) {
  IntVector w = rs.weight_coords(mu);
  const IntMatrix& a = rs.cartan();
  WeylSort out;
  while (true) {
    std::size_t i = 0;
    while (i < w.size() && w[i] >= 0) ++i;
    if (i == w.size()) break;
    const Int m = w[i];
    for (std::size_t j = 0; j < w.size(); ++j) w[j] -= m * a(i, j);
    out.word.push_back(i);
  }
  out.dominant = LatticeVector::weight(std::move(w));
  return out;
}

BigInt weyl_dim(const RootSystem& rs, const LatticeVector& mu) {
  if (!is_dominant(rs, mu)) throw Error(ErrorCode::NotDominant, "weyl_dim needs a dominant weight");
  const IntVector shifted = plus_rho(rs.weight_coords(mu));
  BigInt numerator = 1, denominator = 1;
  for (const auto& alpha : rs.positive_roots()) {
    numerator *= pair_with_root(shifted, alpha);
    denominator *= RootSystem::height(alpha);
  }
  BigInt quotient = numerator / denominator;
  if (quotient * denominator != numerator)
    throw Error(ErrorCode::ConstructionFailure, "Weyl dimension product is not divisible");
  return quotient;
}

CohomologyVerdict bwb(const RootSystem& rs, const LatticeVector& lambda) {
  const LatticeVector shifted = LatticeVector::weight(plus_rho(rs.weight_coords(lambda)));
  CohomologyVerdict v;
  if (is_singular(rs, shifted)) return v;
  WeylSort sorted = dominant_conjugate(rs, shifted);
  v.status = Status::Concentrated;
  v.degree = index(rs, shifted);
  if (v.degree != sorted.word.size())
    throw Error(ErrorCode::ConstructionFailure, "sorting word length differs from the index");
  IntVector mu = sorted.dominant.coords;
  for (auto& c : mu) --c;
  v.highest_weight = LatticeVector::weight(std::move(mu));
  v.dimension = weyl_dim(rs, v.highest_weight);
  v.word = std::move(sorted.word);
  return v;
}

Report verify_prop2(const RootSystem& rs) {
  Report report("prop2");
  const auto& roots = rs.roots();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    ++report.checked;
    const CohomologyVerdict v = bwb(rs, LatticeVector::root(roots[k]));
    const bool negative_simple = !rs.is_positive(k) && RootSystem::height(roots[k]) == 1;
    const std::string where = format_vector(roots[k]);
    if (v.status == Status::Concentrated && v.degree >= 2)
      report.fail("H^" + std::to_string(v.degree) + " != 0 at " + where);
    const bool h1 = v.status == Status::Concentrated && v.degree == 1;
    if (h1 != negative_simple) report.fail("H^1 nonvanishing mismatch at " + where);
    if (h1 && v.dimension != 1) report.fail("dim H^1 != 1 at " + where);
  }
  return report;
}

Report verify_lemma3(const RootSystem& rs) {
  Report report("lemma3");
  const auto& roots = rs.roots();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    ++report.checked;
    const IntVector w = rs.to_weight_coords(roots[k]);
    const std::string where = format_vector(roots[k]);
    const bool simple = RootSystem::height(roots[k]) == 1;
    const bool positive = rs.is_positive(k);

    const auto shifted = LatticeVector::weight(plus_rho(w));
    if (!is_singular(rs, shifted) && index(rs, shifted) > 1) report.fail("ind(alpha+rho) > 1 at " + where);

    const Int lo = (simple && !positive) ? -2 : -1;
    const Int hi = (simple && positive) ? 2 : 1;
    for (Int c : w)
      if (c < lo || c > hi) report.fail("weight coordinate out of range at " + where);

    if (simple && !positive) {
      // Only alpha_i itself pairs negatively with -alpha_i + rho.
      const IntVector sw = plus_rho(w);
      for (std::size_t j = 0; j < rs.num_positive(); ++j)
        if (pair_with_root(sw, roots[j]) < 0 && roots[j] != rs.roots()[rs.negation(k)])
          report.fail("extra negative pairing at " + where);
    }
  }
  return report;
}

Int schubert_restriction_degree(const RootSystem& rs, const LatticeVector& lambda, std::size_t i) {
  if (i >= rs.r()) throw Error(ErrorCode::IndexOutOfRange, "simple index " + std::to_string(i));
  return rs.weight_coords(lambda)[i];
}

TrivialityVerdict triviality_criterion(const RootSystem& rs, const std::map<std::size_t, bool>& nonvanishing) {
  TrivialityVerdict v;
  for (std::size_t i = 0; i < rs.r(); ++i) {
    auto it = nonvanishing.find(i);
    if (it == nonvanishing.end())
      throw Error(ErrorCode::IndexOutOfRange, "no class given for simple root " + std::to_string(i + 1));
    if (!it->second) {
      v.trivial = false;
      v.failing.push_back(i);
    }
  }
  for (const auto& [i, flag] : nonvanishing)
    if (i >= rs.r()) throw Error(ErrorCode::IndexOutOfRange, "simple index " + std::to_string(i));
  return v;
}

}  // namespace adelie::flag
