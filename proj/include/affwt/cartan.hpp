#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "affwt/checked.hpp"

namespace affwt {

enum class Family { A, B };

/// Untwisted affine type A_n^(1) (n >= 1) or B_n^(1) (n >= 3).
class AffineType {
 public:
  /// Throws UnsupportedTypeError when the rank is out of range for the family.
  AffineType(Family family, int rank);

  /// Parses "A1", "a2", "B3", ... (case-insensitive).
  static AffineType parse(std::string_view text);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::size_t num_nodes() const { return static_cast<std::size_t>(rank_) + 1; }
  std::string name() const;

  friend bool operator==(const AffineType&, const AffineType&) = default;

 private:
  Family family_;
  int rank_;
};

std::ostream& operator<<(std::ostream& os, const AffineType& t);

/// Element of P = Z Lambda_0 + ... + Z Lambda_n + Z delta.
struct WeightVector {
  std::vector<Int> lambda;
  Int dcoef = 0;

  WeightVector() = default;
  explicit WeightVector(std::size_t nodes) : lambda(nodes, 0) {}
  WeightVector(std::vector<Int> l, Int d) : lambda(std::move(l)), dcoef(d) {}

  /// <h_i, W>; delta pairs to zero with every h_i.
  Int pairing(std::size_t i) const { return lambda.at(i); }

  WeightVector& operator+=(const WeightVector& rhs);
  WeightVector& operator-=(const WeightVector& rhs);

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

WeightVector operator+(WeightVector lhs, const WeightVector& rhs);
WeightVector operator-(WeightVector lhs, const WeightVector& rhs);
WeightVector operator*(Int scalar, WeightVector w);

/// "2Λ1 - δ", "-Λ0 - Λ1 + Λ2 - δ", "0".
std::string format_weight(const WeightVector& w);
std::ostream& operator<<(std::ostream& os, const WeightVector& w);

/// Generalized Cartan matrix plus the fixed orientation o_{i,j}.
/// Immutable after construction.
class CartanDatum {
 public:
  explicit CartanDatum(AffineType type);

  const AffineType& type() const { return type_; }
  std::size_t num_nodes() const { return type_.num_nodes(); }
  int rank() const { return type_.rank(); }

  /// C_{ij} = alpha_j(h_i).
  int cartan(int i, int j) const;
  /// o_{i,j} for i != j; o_{i,j} + o_{j,i} = 1.
  int orientation(int i, int j) const;

  void check_index(int i) const;
  bool valid_index(int i) const { return i >= 0 && static_cast<std::size_t>(i) < num_nodes(); }

 private:
  AffineType type_;
  std::vector<int> matrix_;  // row-major (n+1) x (n+1)
};

CartanDatum build_datum(const AffineType& type);

/// alpha_j = sum_i C_{ij} Lambda_i + [j = 0] delta.
WeightVector simple_root(const CartanDatum& datum, int j);

/// Coefficients d_i with delta = sum_i d_i alpha_i.
std::vector<Int> delta_in_roots(const CartanDatum& datum);

/// Weight sum_i p_i Lambda_i with dcoef 0.
WeightVector fundamental_combination(const std::vector<Int>& p);

}  // namespace affwt
