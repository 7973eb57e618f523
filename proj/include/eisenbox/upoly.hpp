#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eisenbox/exactnum.hpp"

namespace eisenbox {

/// Dense univariate polynomial over Q, coefficients from degree 0 upwards.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c);
  static UPoly x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational leading() const;

  Rational operator()(const Rational& at) const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& k, const UPoly& a);
  friend bool operator==(const UPoly&, const UPoly&) = default;

  UPoly derivative() const;
  UPoly monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  UPoly primitive() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero only if both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

struct RationalRoot {
  Rational value;
  int multiplicity = 0;
};

/// All rational roots in increasing order and the cofactor left once they
/// are divided out (constant when p splits over Q).
struct RationalRootSplit {
  std::vector<RationalRoot> roots;
  UPoly cofactor;
};
RationalRootSplit rational_roots(const UPoly& p);

/// Integer roots of a polynomial with integer coefficients.
std::vector<Integer> integer_roots(const UPoly& p);

}  // namespace eisenbox
