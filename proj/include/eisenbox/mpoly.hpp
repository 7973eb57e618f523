#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eisenbox/exactnum.hpp"

namespace eisenbox {

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

/// Graded lexicographic order: lower total degree first; within a degree the
/// exponent with the larger power of the earliest variable comes first, so
/// x1^2 < x1*x2 < x2^2. Every printed or serialized term list follows it.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial over Q. No zero coefficients are stored.
class MPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexLess>;

  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Rational& c);
  static MPoly variable(std::size_t nvars, std::size_t index);
  static MPoly monomial(Exponent e, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coeff(const Exponent& e) const;

  /// Adds c to the coefficient of x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const Rational& c);

  int degree() const;      ///< maximal total degree; -1 for zero
  int low_degree() const;  ///< ord: minimal total degree; throws on zero
  int degree_in(std::size_t var) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly&, const MPoly&) = default;

  MPoly pow(unsigned k) const;
  MPoly derivative(std::size_t var) const;
  /// Terms of total degree <= d.
  MPoly truncated(int d) const;
  /// Homogeneous part of total degree d.
  MPoly homogeneous_part(int d) const;

  /// Replaces variable `var` by `value` (a polynomial in the same ring).
  MPoly substitute(std::size_t var, const MPoly& value) const;
  /// Embeds into a ring with more variables; variable i maps to slot map[i].
  MPoly embed(std::size_t new_nvars, const std::vector<std::size_t>& slots) const;

  /// The quotient when `divisor` divides this polynomial exactly.
  std::optional<MPoly> exact_divide(const MPoly& divisor) const;

  /// Lcm of coefficient denominators (1 for the zero polynomial).
  Integer denominator_lcm() const;

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Canonical text form, e.g. "-1 - x + y^2", using the given variable names.
std::string to_string(const MPoly& p, const std::vector<std::string>& names);

/// Monomial text such as "x1^2*x2" (empty for the unit monomial).
std::string monomial_string(const Exponent& e, const std::vector<std::string>& names);

/// "x" for one variable, "x1".."xn" otherwise.
std::vector<std::string> default_names(std::size_t nvars);

}  // namespace eisenbox
