#include "adelie/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <set>

#include "adelie/error.hpp"

namespace adelie {

std::string_view to_string(Basis basis) {
  return basis == Basis::SimpleRoot ? "root" : "weight";
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  if (a.basis != b.basis || a.rank() != b.rank())
    throw Error(ErrorCode::BasisMismatch, "cannot add vectors in different bases or ranks");
  LatticeVector s = a;
  for (std::size_t i = 0; i < s.coords.size(); ++i) s.coords[i] += b.coords[i];
  return s;
}

LatticeVector operator-(const LatticeVector& a) {
  LatticeVector n = a;
  for (auto& c : n.coords) c = -c;
  return n;
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) { return a + (-b); }

std::string TypeSpec::name() const {
  const char letter = kind == Kind::A ? 'A' : kind == Kind::D ? 'D' : 'E';
  return std::string(1, letter) + std::to_string(rank);
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> edges_for(Kind kind, int rank) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const auto n = static_cast<std::size_t>(rank);
  switch (kind) {
    case Kind::A:
      for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Kind::D:
      for (std::size_t i = 0; i + 3 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 3, n - 2);
      edges.emplace_back(n - 3, n - 1);
      break;
    case Kind::E:
      // Bourbaki: 1-3, 3-4, 4-5, 5-6, ..., plus 2-4.
      edges.emplace_back(0, 2);
      edges.emplace_back(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
  }
  return edges;
}

void check_legal(Kind kind, int rank) {
  const bool ok = (kind == Kind::A && rank >= 1) || (kind == Kind::D && rank >= 3) ||
                  (kind == Kind::E && rank >= 6 && rank <= 8);
  if (!ok) throw Error(ErrorCode::IllegalType, TypeSpec{kind, rank}.name() + " is not an ADE type");
}

}  // namespace

IntMatrix cartan_matrix(Kind kind, int rank) {
  check_legal(kind, rank);
  IntMatrix a(static_cast<std::size_t>(rank), static_cast<std::size_t>(rank));
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) = 2;
  for (auto [i, j] : edges_for(kind, rank)) {
    a(i, j) = -1;
    a(j, i) = -1;
  }
  return a;
}

TypeSpec parse_type(std::string_view text, int max_rank) {
  auto bad = [&](const std::string& why) {
    return Error(ErrorCode::IllegalType, "'" + std::string(text) + "': " + why);
  };
  if (text.size() < 2) throw bad("expected a letter followed by a rank");
  TypeSpec spec;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': spec.kind = Kind::A; break;
    case 'D': spec.kind = Kind::D; break;
    case 'E': spec.kind = Kind::E; break;
    default: throw bad("only A, D and E series are supported");
  }
  const char* first = text.data() + 1;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, spec.rank);
  if (ec != std::errc() || ptr != last) throw bad("rank is not an integer");
  check_legal(spec.kind, spec.rank);
  if (spec.kind != Kind::E && spec.rank > max_rank)
    throw bad("rank exceeds the configured cap of " + std::to_string(max_rank));
  return spec;
}

RootSystem RootSystem::build(Kind kind, int rank) {
  RootSystem rs;
  rs.kind_ = kind;
  rs.rank_ = rank;
  rs.cartan_ = cartan_matrix(kind, rank);
  rs.det_ = determinant(rs.cartan_);
  if (rs.det_ == 0) throw Error(ErrorCode::ConstructionFailure, "singular Cartan matrix");
  const std::size_t n = rs.r();

  // Positive roots level by level. For beta of height h and a simple root
  // alpha_i, the alpha_i-string through beta has p - q = (beta, alpha_i)
  // and p is known from lower levels, so beta + alpha_i is a root iff q > 0.
  std::set<IntVector> known;
  std::vector<IntVector> level;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    level.push_back(e);
    known.insert(e);
  }
  std::vector<IntVector> positive;
  while (!level.empty()) {
    // Within a level, larger leading coordinates first: alpha_1, ..., alpha_r.
    std::sort(level.begin(), level.end(), std::greater<>());
    positive.insert(positive.end(), level.begin(), level.end());
    std::set<IntVector> next;
    for (const auto& beta : level) {
      for (std::size_t i = 0; i < n; ++i) {
        Int inner = 0;
        for (std::size_t j = 0; j < n; ++j) inner += beta[j] * rs.cartan_(j, i);
        int p = 0;
        IntVector down = beta;
        while (true) {
          --down[i];
          if (!known.contains(down)) break;
          ++p;
        }
        const Int q = p - inner;
        if (q > 0) {
          IntVector up = beta;
          ++up[i];
          next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
    known.insert(next.begin(), next.end());
  }

  rs.num_positive_ = positive.size();
  rs.roots_ = positive;
  for (const auto& root : positive) {
    IntVector neg = root;
    for (auto& c : neg) c = -c;
    rs.roots_.push_back(neg);
  }
  for (std::size_t k = 0; k < rs.roots_.size(); ++k) rs.lookup_.emplace(rs.roots_[k], k);

  const std::size_t total = rs.roots_.size();
  rs.sum_table_.assign(total * total, -1);
  IntVector sum(n);
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = 0; b < total; ++b) {
      for (std::size_t j = 0; j < n; ++j) sum[j] = rs.roots_[a][j] + rs.roots_[b][j];
      if (auto it = rs.lookup_.find(sum); it != rs.lookup_.end())
        rs.sum_table_[a * total + b] = static_cast<int>(it->second);
    }

  for (std::size_t i = 0; i < n; ++i) rs.simple_index_.push_back(*rs.index_of(rs.simple_root(i)));

  // The maximal-height root must be unique.
  if (rs.num_positive_ > 1 &&
      height(rs.roots_[rs.num_positive_ - 1]) == height(rs.roots_[rs.num_positive_ - 2]))
    throw Error(ErrorCode::ConstructionFailure, "highest root is not unique");
  return rs;
}

IntVector RootSystem::simple_root(std::size_t i) const {
  if (i >= r()) throw Error(ErrorCode::IndexOutOfRange, "simple root index " + std::to_string(i));
  IntVector e(r(), 0);
  e[i] = 1;
  return e;
}

std::size_t RootSystem::simple_root_index(std::size_t i) const {
  if (i >= r()) throw Error(ErrorCode::IndexOutOfRange, "simple root index " + std::to_string(i));
  return simple_index_[i];
}

std::size_t RootSystem::negation(std::size_t root_index) const {
  return root_index < num_positive_ ? root_index + num_positive_ : root_index - num_positive_;
}

std::optional<std::size_t> RootSystem::index_of(const IntVector& root_coords) const {
  if (auto it = lookup_.find(root_coords); it != lookup_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::size_t> RootSystem::sum_index(std::size_t a, std::size_t b) const {
  const int v = sum_table_[a * roots_.size() + b];
  if (v < 0) return std::nullopt;
  return static_cast<std::size_t>(v);
}

IntVector RootSystem::to_weight_coords(const IntVector& root_coords) const {
  IntVector w(r(), 0);
  for (std::size_t i = 0; i < r(); ++i)
    for (std::size_t j = 0; j < r(); ++j) w[j] += root_coords[i] * cartan_(i, j);
  return w;
}

std::optional<std::vector<Rational>> RootSystem::to_rational_root_coords(const IntVector& weight_coords) const {
  std::vector<Rational> b(weight_coords.begin(), weight_coords.end());
  return solve_row(cartan_, b);
}

std::optional<IntVector> RootSystem::to_root_coords(const IntVector& weight_coords) const {
  auto x = to_rational_root_coords(weight_coords);
  if (!x) throw Error(ErrorCode::SingularSystem, "Cartan matrix is singular");
  return to_integers(*x);
}

void RootSystem::check_rank(const LatticeVector& v) const {
  if (v.rank() != r())
    throw Error(ErrorCode::BasisMismatch, "vector of rank " + std::to_string(v.rank()) + " used with " + name());
}

LatticeVector RootSystem::to_basis(const LatticeVector& v, Basis target) const {
  check_rank(v);
  if (v.basis == target) return v;
  if (target == Basis::FundamentalWeight) return LatticeVector::weight(to_weight_coords(v.coords));
  auto c = to_root_coords(v.coords);
  if (!c) throw Error(ErrorCode::NotInRootLattice, "weight does not lie in the root lattice");
  return LatticeVector::root(std::move(*c));
}

IntVector RootSystem::weight_coords(const LatticeVector& v) const {
  return to_basis(v, Basis::FundamentalWeight).coords;
}

Int RootSystem::root_pairing(const IntVector& a, const IntVector& b) const {
  Int s = 0;
  for (std::size_t i = 0; i < r(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < r(); ++j) s += a[i] * cartan_(i, j) * b[j];
  }
  return s;
}

Int RootSystem::pairing(const LatticeVector& v, const LatticeVector& w) const {
  check_rank(v);
  check_rank(w);
  auto dot = [](const IntVector& a, const IntVector& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };
  if (v.basis == Basis::SimpleRoot && w.basis == Basis::SimpleRoot) return root_pairing(v.coords, w.coords);
  if (v.basis == Basis::SimpleRoot) return dot(v.coords, w.coords);
  if (w.basis == Basis::SimpleRoot) return dot(v.coords, w.coords);
  if (auto c = to_root_coords(v.coords)) return dot(*c, w.coords);
  if (auto c = to_root_coords(w.coords)) return dot(v.coords, *c);
  throw Error(ErrorCode::NotInRootLattice, "pairing of two weights outside the root lattice is not integral");
}

Int RootSystem::signed_height(const IntVector& root_coords) {
  Int s = 0;
  for (Int c : root_coords) s += c;
  return s;
}

Int RootSystem::height(const IntVector& root_coords) {
  const Int s = signed_height(root_coords);
  return s < 0 ? -s : s;
}

RootString RootSystem::root_string(const IntVector& alpha, const IntVector& beta) const {
  if (!is_root(alpha) || !is_root(beta)) throw Error(ErrorCode::NotARoot, "root_string arguments must be roots");
  IntVector neg = alpha;
  for (auto& c : neg) c = -c;
  if (beta == alpha || beta == neg) throw Error(ErrorCode::DependentRoots, "beta = +-alpha");
  RootString s;
  IntVector v = beta;
  while (true) {
    for (std::size_t i = 0; i < r(); ++i) v[i] -= alpha[i];
    if (!is_root(v)) break;
    ++s.p;
  }
  v = beta;
  while (true) {
    for (std::size_t i = 0; i < r(); ++i) v[i] += alpha[i];
    if (!is_root(v)) break;
    ++s.q;
  }
  return s;
}

LatticeVector RootSystem::rho() const { return LatticeVector::weight(IntVector(r(), 1)); }

std::vector<std::pair<std::size_t, std::size_t>> RootSystem::dynkin_edges() const { return edges_for(kind_, rank_); }

}  // namespace adelie
