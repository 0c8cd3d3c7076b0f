#pragma once

#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

#include "rootpoly/numbers.hpp"

namespace rp {

/// Integer-coefficient univariate polynomial, coefficients ascending by
/// exponent, no trailing zeros. The zero polynomial is the empty sequence and
/// has degree kMinusInfinity.
class Polynomial {
 public:
  static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

  Polynomial() = default;
  explicit Polynomial(IntVec coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial({1}); }

  int degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^i (zero outside the stored range).
  const Int& coeff(int i) const;
  const Int& leading() const;
  /// Smallest exponent with nonzero coefficient; kMinusInfinity on zero.
  int lowest_exponent() const;

  const IntVec& coeffs() const { return coeffs_; }

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;

  /// x^d * p(1/x); requires degree() <= d.
  Polynomial reversed_into_degree(int d) const;

  bool is_palindromic() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
  bool operator<(const Polynomial& o) const { return coeffs_ < o.coeffs_; }

  /// True when every coefficient is <= the other's.
  bool coefficientwise_leq(const Polynomial& o) const;

  /// Human form, descending exponents, e.g. "4x^2 + 3x + 1".
  std::string to_string() const;

 private:
  void normalize();
  IntVec coeffs_;
};

}  // namespace rp
