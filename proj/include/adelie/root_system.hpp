#pragma once

// Simply-laced root systems with exact integer arithmetic.
//
// Node numbering: A_n is the path 1-2-...-n; D_n is the path 1-...-(n-2)
// with both n-1 and n attached to n-2; E_n follows Bourbaki (1-3-4-5-6-7-8
// with 2 attached to 4). Indices are 0-based in the C++ API.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adelie/exact.hpp"

namespace adelie {

enum class Kind { A, D, E };

enum class Basis { SimpleRoot, FundamentalWeight };

std::string_view to_string(Basis basis);

// Integer vector tagged with the basis its coordinates refer to.
struct LatticeVector {
  IntVector coords;
  Basis basis = Basis::SimpleRoot;

  static LatticeVector root(IntVector c) { return {std::move(c), Basis::SimpleRoot}; }
  static LatticeVector weight(IntVector c) { return {std::move(c), Basis::FundamentalWeight}; }

  std::size_t rank() const { return coords.size(); }

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a);

struct TypeSpec {
  Kind kind = Kind::A;
  int rank = 1;

  std::string name() const;
  friend bool operator==(const TypeSpec&, const TypeSpec&) = default;
};

inline constexpr int kDefaultMaxRank = 16;

// Parses "A1".."A16", "D3".."D16", "E6".."E8" (case-insensitive). Ranks
// above max_rank are rejected for the A and D series.
TypeSpec parse_type(std::string_view text, int max_rank = kDefaultMaxRank);

struct RootString {
  int p = 0;  // max k with beta - k*alpha a root
  int q = 0;  // max k with beta + k*alpha a root
};

class RootSystem {
 public:
  static RootSystem build(Kind kind, int rank);
  static RootSystem build(const TypeSpec& spec) { return build(spec.kind, spec.rank); }

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }
  std::size_t r() const { return static_cast<std::size_t>(rank_); }
  TypeSpec type() const { return {kind_, rank_}; }
  std::string name() const { return type().name(); }

  const IntMatrix& cartan() const { return cartan_; }
  Int cartan_determinant() const { return det_; }

  // All roots in simple-root coordinates: the positive roots sorted by
  // height, then by decreasing lexicographic order so that alpha_1, ...,
  // alpha_r come first; then their negatives in the same order, so
  // roots()[num_positive() + k] == -roots()[k].
  const std::vector<IntVector>& roots() const { return roots_; }
  std::span<const IntVector> positive_roots() const { return {roots_.data(), num_positive_}; }
  std::size_t num_positive() const { return num_positive_; }
  std::size_t num_roots() const { return roots_.size(); }
  std::size_t dimension() const { return r() + roots_.size(); }

  IntVector simple_root(std::size_t i) const;
  std::size_t simple_root_index(std::size_t i) const;  // position of alpha_i in roots()
  bool is_positive(std::size_t root_index) const { return root_index < num_positive_; }
  std::size_t negation(std::size_t root_index) const;

  std::optional<std::size_t> index_of(const IntVector& root_coords) const;
  bool is_root(const IntVector& root_coords) const { return index_of(root_coords).has_value(); }
  // Index of roots()[a] + roots()[b] when the sum is a root.
  std::optional<std::size_t> sum_index(std::size_t a, std::size_t b) const;

  // Basis change. Root coords c map to weight coords c^T * cartan.
  IntVector to_weight_coords(const IntVector& root_coords) const;
  std::optional<IntVector> to_root_coords(const IntVector& weight_coords) const;
  std::optional<std::vector<Rational>> to_rational_root_coords(const IntVector& weight_coords) const;
  LatticeVector to_basis(const LatticeVector& v, Basis target) const;
  IntVector weight_coords(const LatticeVector& v) const;

  // Symmetric form with (alpha, alpha) = 2. At least one argument must lie
  // in the root lattice for the value to be an integer.
  Int pairing(const LatticeVector& v, const LatticeVector& w) const;
  Int root_pairing(const IntVector& a, const IntVector& b) const;

  // Height of the positive root +-alpha; signed_height is the plain
  // coordinate sum.
  static Int height(const IntVector& root_coords);
  static Int signed_height(const IntVector& root_coords);

  RootString root_string(const IntVector& alpha, const IntVector& beta) const;

  LatticeVector rho() const;
  const IntVector& highest_root() const { return roots_[num_positive_ - 1]; }

  std::vector<std::pair<std::size_t, std::size_t>> dynkin_edges() const;

 private:
  RootSystem() = default;
  void check_rank(const LatticeVector& v) const;

  Kind kind_ = Kind::A;
  int rank_ = 0;
  IntMatrix cartan_;
  Int det_ = 0;
  std::size_t num_positive_ = 0;
  std::vector<IntVector> roots_;
  std::map<IntVector, std::size_t> lookup_;
  std::vector<int> sum_table_;
  std::vector<std::size_t> simple_index_;
};

// Cartan matrix for a legal (kind, rank) pair; IllegalType otherwise.
IntMatrix cartan_matrix(Kind kind, int rank);

}  // namespace adelie
