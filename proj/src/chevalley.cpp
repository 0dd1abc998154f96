#include "adelie/chevalley.hpp"

#include <random>

#include "adelie/error.hpp"
#include "adelie/format.hpp"

namespace adelie {
namespace {

// Parity of sum_{i,j} a_i b_j e_ij with e_ii = 1 and e_ij = 1 for i < j
// adjacent; eps(a, b) = (-1)^parity.
int epsilon(const RootSystem& rs, const IntVector& a, const IntVector& b) {
  Int parity = 0;
  for (std::size_t i = 0; i < rs.r(); ++i) parity += a[i] * b[i];
  for (auto [i, j] : rs.dynkin_edges()) {
    const auto lo = std::min(i, j), hi = std::max(i, j);
    parity += a[lo] * b[hi];
  }
  return (parity % 2 == 0) ? 1 : -1;
}

int positivity_sign(const IntVector& root) { return RootSystem::signed_height(root) > 0 ? 1 : -1; }

// Dense accumulator with a touched list, reused across many small sums.
class Accumulator {
 public:
  explicit Accumulator(std::size_t dim) : values_(dim, 0), seen_(dim, 0) {}

  void add(std::uint32_t index, Int coeff) {
    if (!seen_[index]) {
      seen_[index] = 1;
      touched_.push_back(index);
    }
    values_[index] += coeff;
  }

  // Returns true when everything accumulated cancels, and resets.
  bool drain_is_zero() {
    bool zero = true;
    for (auto i : touched_) {
      if (values_[i] != 0) zero = false;
      values_[i] = 0;
      seen_[i] = 0;
    }
    touched_.clear();
    return zero;
  }

 private:
  std::vector<Int> values_;
  std::vector<char> seen_;
  std::vector<std::uint32_t> touched_;
};

std::string basis_label(const RootSystem& rs, std::size_t k) {
  if (k < rs.r()) return "h" + std::to_string(k + 1);
  return "x" + format_vector(rs.roots()[k - rs.r()]);
}

using SparseColumns = std::vector<std::vector<Term>>;

SparseColumns ad_columns(const StructureTable& table, std::span<const Term> element) {
  const std::size_t dim = table.dimension();
  SparseColumns cols(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    std::map<std::uint32_t, Int> col;
    for (const auto& e : element)
      for (const auto& t : table.bracket(e.index, k)) col[t.index] += e.coeff * t.coeff;
    for (auto [idx, v] : col)
      if (v != 0) cols[k].push_back({idx, v});
  }
  return cols;
}

// (a * b) column k = sum over entries (s, v) of b's column k of v * a[:, s].
SparseColumns multiply(const SparseColumns& a, const SparseColumns& b) {
  SparseColumns out(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) {
    std::map<std::uint32_t, Int> col;
    for (const auto& s : b[k])
      for (const auto& t : a[s.index]) col[t.index] += s.coeff * t.coeff;
    for (auto [idx, v] : col)
      if (v != 0) out[k].push_back({idx, v});
  }
  return out;
}

std::uint64_t pick(std::mt19937_64& rng, std::size_t n) { return rng() % n; }

}  // namespace

ChevalleyConstants ChevalleyConstants::build(std::shared_ptr<const RootSystem> rs) {
  ChevalleyConstants c;
  c.rs_ = std::move(rs);
  const auto& roots = c.rs_->roots();
  const std::size_t total = roots.size();
  c.table_.assign(total * total, 0);
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = 0; b < total; ++b) {
      auto s = c.rs_->sum_index(a, b);
      if (!s) continue;
      const int sign = epsilon(*c.rs_, roots[a], roots[b]) * positivity_sign(roots[a]) *
                       positivity_sign(roots[b]) * positivity_sign(roots[*s]);
      c.table_[a * total + b] = static_cast<std::int8_t>(sign);
    }

  for (const auto& report : {verify_support(c), verify_cocycle(c)})
    if (!report.ok())
      throw Error(ErrorCode::ConstructionFailure,
                  report.name + " failed for " + c.rs_->name() + ": " + report.violations.front());
  return c;
}

int ChevalleyConstants::n(const IntVector& a, const IntVector& b) const {
  auto ia = rs_->index_of(a), ib = rs_->index_of(b);
  if (!ia || !ib) throw Error(ErrorCode::NotARoot, "structure constant of non-roots");
  return n(*ia, *ib);
}

ChevalleyConstants ChevalleyConstants::mutated(std::size_t a, std::size_t b) const {
  ChevalleyConstants copy = *this;
  auto& entry = copy.table_[a * rs_->num_roots() + b];
  entry = static_cast<std::int8_t>(-entry);
  return copy;
}

std::string ChevalleyConstants::dump() const {
  std::string out;
  const auto& roots = rs_->roots();
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = 0; b < roots.size(); ++b) {
      const int v = n(a, b);
      if (v == 0) continue;
      out += format_vector(roots[a]) + " | " + format_vector(roots[b]) + " | " + (v > 0 ? "+1" : "-1") + "\n";
    }
  return out;
}

StructureTable::StructureTable(const ChevalleyConstants& c) {
  const RootSystem& rs = c.system();
  const std::size_t r = rs.r();
  dim_ = rs.dimension();
  terms_.assign(dim_ * dim_, {});
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      auto& out = terms_[i * dim_ + j];
      if (i < r && j < r) continue;
      if (i < r) {
        const Int v = rs.root_pairing(rs.roots()[j - r], rs.simple_root(i));
        if (v != 0) out.push_back({static_cast<std::uint32_t>(j), v});
        continue;
      }
      if (j < r) {
        const Int v = rs.root_pairing(rs.roots()[i - r], rs.simple_root(j));
        if (v != 0) out.push_back({static_cast<std::uint32_t>(i), -v});
        continue;
      }
      const std::size_t a = i - r, b = j - r;
      if (rs.negation(a) == b) {
        const auto& h = c.h_coeffs(a);
        for (std::size_t k = 0; k < r; ++k)
          if (h[k] != 0) out.push_back({static_cast<std::uint32_t>(k), h[k]});
      } else if (auto s = rs.sum_index(a, b)) {
        out.push_back({static_cast<std::uint32_t>(r + *s), c.n(a, b)});
      }
    }
}

LieElement LieElement::zero(const RootSystem& rs) { return {rs.type(), IntVector(rs.r(), 0), {}}; }

LieElement LieElement::h(const RootSystem& rs, std::size_t i) {
  if (i >= rs.r()) throw Error(ErrorCode::IndexOutOfRange, "h index " + std::to_string(i));
  auto e = zero(rs);
  e.cartan_part[i] = 1;
  return e;
}

LieElement LieElement::x(const RootSystem& rs, std::size_t root_index) {
  if (root_index >= rs.num_roots()) throw Error(ErrorCode::IndexOutOfRange, "root index " + std::to_string(root_index));
  auto e = zero(rs);
  e.root_part[root_index] = 1;
  return e;
}

LieElement LieElement::basis(const RootSystem& rs, std::size_t k) {
  return k < rs.r() ? h(rs, k) : x(rs, k - rs.r());
}

LieElement LieElement::from_dense(const RootSystem& rs, const IntVector& coeffs) {
  if (coeffs.size() != rs.dimension()) throw Error(ErrorCode::SystemMismatch, "dense vector has wrong length");
  auto e = zero(rs);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k < rs.r())
      e.cartan_part[k] = coeffs[k];
    else if (coeffs[k] != 0)
      e.root_part[k - rs.r()] = coeffs[k];
  }
  return e;
}

IntVector LieElement::dense(const RootSystem& rs) const {
  if (rs.type() != type) throw Error(ErrorCode::SystemMismatch, "element belongs to another algebra");
  const std::size_t r = rs.r();
  IntVector out(rs.dimension(), 0);
  for (std::size_t i = 0; i < r; ++i) out[i] = cartan_part[i];
  for (auto [k, v] : root_part) out[r + k] = v;
  return out;
}

bool LieElement::is_zero() const {
  for (Int v : cartan_part)
    if (v != 0) return false;
  return root_part.empty();
}

void LieElement::prune() { std::erase_if(root_part, [](const auto& kv) { return kv.second == 0; }); }

LieElement& LieElement::operator+=(const LieElement& o) {
  if (o.type != type) throw Error(ErrorCode::SystemMismatch, "adding elements of different algebras");
  for (std::size_t i = 0; i < cartan_part.size(); ++i) cartan_part[i] += o.cartan_part[i];
  for (auto [k, v] : o.root_part) root_part[k] += v;
  prune();
  return *this;
}

LieElement& LieElement::operator*=(Int s) {
  for (auto& v : cartan_part) v *= s;
  for (auto& [k, v] : root_part) v *= s;
  prune();
  return *this;
}

LieElement bracket(const LieElement& x, const LieElement& y, const ChevalleyConstants& c) {
  const RootSystem& rs = c.system();
  if (x.type != rs.type() || y.type != rs.type())
    throw Error(ErrorCode::SystemMismatch, "bracket of elements from different algebras");
  LieElement out = LieElement::zero(rs);
  const std::size_t r = rs.r();
  // [h, x_b] = (b, h) x_b
  auto h_action = [&](const IntVector& h, std::size_t root) {
    Int s = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (h[i] != 0) s += h[i] * rs.root_pairing(rs.roots()[root], rs.simple_root(i));
    return s;
  };
  for (auto [b, yb] : y.root_part) out.root_part[b] += h_action(x.cartan_part, b) * yb;
  for (auto [a, xa] : x.root_part) out.root_part[a] -= h_action(y.cartan_part, a) * xa;
  for (auto [a, xa] : x.root_part)
    for (auto [b, yb] : y.root_part) {
      if (rs.negation(a) == b) {
        const auto& h = c.h_coeffs(a);
        for (std::size_t i = 0; i < r; ++i) out.cartan_part[i] += xa * yb * h[i];
      } else if (auto s = rs.sum_index(a, b)) {
        out.root_part[*s] += xa * yb * c.n(a, b);
      }
    }
  std::erase_if(out.root_part, [](const auto& kv) { return kv.second == 0; });
  return out;
}

IntMatrix adjoint_matrix(const LieElement& x, const ChevalleyConstants& c) {
  const RootSystem& rs = c.system();
  const std::size_t dim = rs.dimension();
  IntMatrix m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const LieElement col = bracket(x, LieElement::basis(rs, j), c);
    for (std::size_t i = 0; i < rs.r(); ++i) m(i, j) = col.cartan_part[i];
    for (auto [k, v] : col.root_part) m(rs.r() + k, j) = v;
  }
  return m;
}

Report verify_support(const ChevalleyConstants& c) {
  Report report("support/antisymmetry");
  const RootSystem& rs = c.system();
  const auto& roots = rs.roots();
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = 0; b < roots.size(); ++b) {
      ++report.checked;
      const int v = c.n(a, b);
      const bool sum_is_root = rs.sum_index(a, b).has_value();
      const std::string where = format_vector(roots[a]) + "," + format_vector(roots[b]);
      if (v < -1 || v > 1) report.fail("n out of range at " + where);
      if ((v != 0) != sum_is_root) report.fail("support mismatch at " + where);
      if (v != -c.n(b, a)) report.fail("antisymmetry at " + where);
      // Strings have length <= 2, so the (d) coefficient +-(p+1) is +-1.
      if (sum_is_root && rs.negation(a) != b && rs.root_string(roots[a], roots[b]).p != 0)
        report.fail("root string longer than 2 at " + where);
    }
  return report;
}

Report verify_cocycle(const ChevalleyConstants& c) {
  Report report("cocycle");
  const RootSystem& rs = c.system();
  const std::size_t total = rs.num_roots();
  auto term = [&](std::size_t a, std::size_t b, std::size_t g) -> int {
    const int nab = c.n(a, b);
    if (nab == 0) return 0;
    return nab * c.n(*rs.sum_index(a, b), g);
  };
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = 0; b < total; ++b) {
      if (b == a || b == rs.negation(a)) continue;
      for (std::size_t g = 0; g < total; ++g) {
        if (g == a || g == b || g == rs.negation(a) || g == rs.negation(b)) continue;
        ++report.checked;
        if (term(a, b, g) + term(b, g, a) + term(g, a, b) != 0)
          report.fail("cocycle at " + format_vector(rs.roots()[a]) + "," + format_vector(rs.roots()[b]) + "," +
                      format_vector(rs.roots()[g]));
      }
    }
  return report;
}

Report verify_jacobi(const ChevalleyConstants& c, const ChevalleyVerifyOptions& opts) {
  Report report("jacobi");
  const RootSystem& rs = c.system();
  const StructureTable table(c);
  const std::size_t dim = table.dimension();
  Accumulator acc(dim);
  auto nested = [&](std::size_t a, std::size_t b, std::size_t g) {
    for (const auto& t : table.bracket(b, g))
      for (const auto& u : table.bracket(a, t.index)) acc.add(u.index, t.coeff * u.coeff);
  };
  auto check = [&](std::size_t a, std::size_t b, std::size_t g) {
    ++report.checked;
    nested(a, b, g);
    nested(b, g, a);
    nested(g, a, b);
    if (!acc.drain_is_zero())
      report.fail("jacobi at " + basis_label(rs, a) + "," + basis_label(rs, b) + "," + basis_label(rs, g));
  };
  if (opts.jacobi_full || dim <= opts.jacobi_exhaustive_max_dim) {
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b)
        for (std::size_t g = 0; g < dim; ++g) check(a, b, g);
  } else {
    report.sampled = true;
    std::mt19937_64 rng(opts.seed);
    for (std::size_t s = 0; s < opts.jacobi_samples; ++s) {
      const auto a = pick(rng, dim), b = pick(rng, dim), g = pick(rng, dim);
      check(a, b, g);
    }
  }
  return report;
}

Report verify_ad_homomorphism(const ChevalleyConstants& c, std::size_t pairs, std::uint64_t seed) {
  Report report("ad-homomorphism");
  report.sampled = true;
  const RootSystem& rs = c.system();
  const StructureTable table(c);
  const std::size_t dim = table.dimension();
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t s = 0; s < pairs; ++s) {
    const auto i = pick(rng, dim), j = pick(rng, dim);
    ++report.checked;
    const Term ei{static_cast<std::uint32_t>(i), 1}, ej{static_cast<std::uint32_t>(j), 1};
    const SparseColumns ad_i = ad_columns(table, {&ei, 1});
    const SparseColumns ad_j = ad_columns(table, {&ej, 1});
    const SparseColumns ad_ij = ad_columns(table, table.bracket(i, j));
    const SparseColumns lhs1 = multiply(ad_i, ad_j);
    const SparseColumns lhs2 = multiply(ad_j, ad_i);
    bool ok = true;
    for (std::size_t k = 0; k < dim && ok; ++k) {
      std::map<std::uint32_t, Int> diff;
      for (const auto& t : ad_ij[k]) diff[t.index] += t.coeff;
      for (const auto& t : lhs1[k]) diff[t.index] -= t.coeff;
      for (const auto& t : lhs2[k]) diff[t.index] += t.coeff;
      for (auto [idx, v] : diff)
        if (v != 0) ok = false;
    }
    if (!ok) report.fail("ad([" + basis_label(rs, i) + "," + basis_label(rs, j) + "]) != [ad, ad]");
  }
  return report;
}

std::vector<Report> verify_chevalley(const ChevalleyConstants& c, const ChevalleyVerifyOptions& opts) {
  return {verify_support(c), verify_cocycle(c), verify_jacobi(c, opts),
          verify_ad_homomorphism(c, opts.ad_pairs, opts.seed)};
}

}  // namespace adelie
