#pragma once

// Exact integer/rational linear algebra for the small matrices that show up
// in root-system work (rank <= 16). Nothing here ever touches floating point.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace adelie {

using Int = std::int64_t;
using IntVector = std::vector<Int>;

// Reduced fraction with a positive denominator. Arithmetic is carried out in
// 128-bit and checked on the way back to 64-bit.
class Rational {
 public:
  Rational() = default;
  Rational(Int n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(Int n, Int d);

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const { return Rational(-num_, den_); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string str() const;

 private:
  static Rational from_wide(__int128 n, __int128 d);

  Int num_ = 0;
  Int den_ = 1;
};

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator-() const;
  bool is_zero() const;
  bool is_symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::vector<std::vector<Int>> to_rows() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

// Fraction-free (Bareiss) determinant.
Int determinant(const IntMatrix& m);

// Leading principal minors det(m[0..k, 0..k]) for k = 1..n.
std::vector<Int> leading_principal_minors(const IntMatrix& m);

// Solves x * m = b for the row vector x (square m). nullopt if m is singular.
std::optional<std::vector<Rational>> solve_row(const IntMatrix& m, const std::vector<Rational>& b);

// Solves m * x = b for the column vector x (square m). nullopt if m is singular.
std::optional<std::vector<Rational>> solve_column(const IntMatrix& m, const std::vector<Rational>& b);

// Integer vector if every entry is integral.
std::optional<IntVector> to_integers(const std::vector<Rational>& v);

// Exact LDL^T factorisation of a symmetric positive definite matrix:
// m = L * diag(d) * L^T with unit lower-triangular L. nullopt when m is not
// positive definite.
struct LdlFactor {
  std::vector<std::vector<Rational>> lower;  // lower[i][j], j < i
  std::vector<Rational> diag;
};
std::optional<LdlFactor> ldl_decompose(const IntMatrix& m);

// Rank over Z/pZ for p = 2^31 - 1. A lower bound for the rank over Q, and
// equal to it whenever it already reaches the column count.
std::size_t rank_mod_prime(const std::vector<IntVector>& rows, std::size_t cols);

}  // namespace adelie
