#pragma once

#include <vector>

#include "eisenbox/mpoly.hpp"

namespace eisenbox {

/// Multivariate power series truncated at total degree `cap`: every stored
/// term has |α| <= cap, and terms above the cap are unknown. Binary
/// operations produce the minimum of the operand caps.
class TSeries {
 public:
  TSeries() = default;
  TSeries(std::size_t nvars, int cap);
  /// Truncation of a polynomial.
  TSeries(const MPoly& p, int cap);

  std::size_t nvars() const { return poly_.nvars(); }
  int cap() const { return cap_; }
  const MPoly::TermMap& terms() const { return poly_.terms(); }
  const MPoly& polynomial() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  Rational coeff(const Exponent& e) const { return poly_.coeff(e); }
  Rational constant_term() const;

  void add_term(const Exponent& e, const Rational& c);

  TSeries operator-() const;
  friend TSeries operator+(const TSeries& a, const TSeries& b);
  friend TSeries operator-(const TSeries& a, const TSeries& b);
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  friend TSeries operator*(const Rational& c, const TSeries& a);
  friend bool operator==(const TSeries&, const TSeries&) = default;

  /// Same series with a lower cap (terms above it dropped).
  TSeries truncated(int cap) const;

  /// Multiplicative inverse; requires a nonzero constant term.
  TSeries inverse() const;

  /// Lowest-degree homogeneous form and its degree. Throws MathError with
  /// code "zero_to_cap" when the series vanishes up to its cap.
  std::pair<int, MPoly> ord_in() const;

 private:
  MPoly poly_;
  int cap_ = 0;
};

/// Per-variable monomial rescale x_i -> scales[i] * x_i.
TSeries substitute_univariate(const TSeries& f, const std::vector<Rational>& scales);

/// a * f(a*x1, ..., a*xn): coefficient f_α becomes a^{|α|+1} f_α.
TSeries rescale_eisenstein(const TSeries& f, const Integer& a);

/// True when every coefficient is an integer.
bool has_integer_coefficients(const TSeries& f);

}  // namespace eisenbox
