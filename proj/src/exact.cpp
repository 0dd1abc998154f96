#include "adelie/exact.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace adelie {
namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
  return static_cast<Int>(v);
}

}  // namespace

Rational::Rational(Int n, Int d) { *this = from_wide(n, d); }

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num_ = narrow(n);
  r.den_ = narrow(d);
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                             static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix p(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      Int a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) p(r, c) += a * o(k, c);
    }
  return p;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix d = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) d.data_[i] -= o.data_[i];
  return d;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix n = *this;
  for (auto& v : n.data_) v = -v;
  return n;
}

bool IntMatrix::is_zero() const {
  for (Int v : data_)
    if (v != 0) return false;
  return true;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < r; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

std::vector<std::vector<Int>> IntMatrix::to_rows() const {
  std::vector<std::vector<Int>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  return out;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * narrow(a[n - 1][n - 1]);
}

std::vector<Int> leading_principal_minors(const IntMatrix& m) {
  std::vector<Int> minors;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    IntMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
    minors.push_back(determinant(sub));
  }
  return minors;
}

std::optional<std::vector<Rational>> solve_column(const IntMatrix& m, const std::vector<Rational>& b) {
  const std::size_t n = m.rows();
  if (m.cols() != n || b.size() != n) throw std::invalid_argument("solve shape mismatch");
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n] = b[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == Rational(0)) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[col], a[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == Rational(0)) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

std::optional<std::vector<Rational>> solve_row(const IntMatrix& m, const std::vector<Rational>& b) {
  return solve_column(m.transpose(), b);
}

std::optional<IntVector> to_integers(const std::vector<Rational>& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_integer()) return std::nullopt;
    out.push_back(x.num());
  }
  return out;
}

std::optional<LdlFactor> ldl_decompose(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (!m.is_symmetric()) return std::nullopt;
  LdlFactor f;
  f.lower.assign(n, std::vector<Rational>(n));
  f.diag.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= f.lower[i][k] * f.lower[j][k] * f.diag[k];
      f.lower[i][j] = s / f.diag[j];
    }
    Rational d = m(i, i);
    for (std::size_t k = 0; k < i; ++k) d -= f.lower[i][k] * f.lower[i][k] * f.diag[k];
    if (d <= Rational(0)) return std::nullopt;
    f.diag[i] = d;
    f.lower[i][i] = 1;
  }
  return f;
}

std::size_t rank_mod_prime(const std::vector<IntVector>& rows, std::size_t cols) {
  constexpr Int p = 2147483647;
  auto reduce = [](Int v) { return ((v % p) + p) % p; };
  auto inverse = [&](Int a) {
    Int result = 1, base = a, e = p - 2;
    while (e > 0) {
      if (e & 1) result = static_cast<Int>((static_cast<__int128>(result) * base) % p);
      base = static_cast<Int>((static_cast<__int128>(base) * base) % p);
      e >>= 1;
    }
    return result;
  };
  // pivots[c] holds a normalised row with leading entry at column c.
  std::vector<IntVector> pivots(cols);
  std::size_t rank = 0;
  for (const auto& row : rows) {
    IntVector v(cols);
    for (std::size_t c = 0; c < cols; ++c) v[c] = reduce(row[c]);
    for (std::size_t c = 0; c < cols; ++c) {
      if (v[c] == 0) continue;
      if (pivots[c].empty()) {
        Int inv = inverse(v[c]);
        for (auto& x : v) x = static_cast<Int>((static_cast<__int128>(x) * inv) % p);
        pivots[c] = std::move(v);
        ++rank;
        break;
      }
      Int f = v[c];
      for (std::size_t k = c; k < cols; ++k)
        v[k] = reduce(v[k] - static_cast<Int>((static_cast<__int128>(f) * pivots[c][k]) % p));
    }
    if (rank == cols) break;
  }
  return rank;
}

}  // namespace adelie
