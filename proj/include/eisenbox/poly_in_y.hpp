#pragma once

#include <vector>

#include "eisenbox/mpoly.hpp"
#include "eisenbox/tseries.hpp"
#include "eisenbox/uniseries.hpp"

namespace eisenbox {

/// P(x, y) = Σ_i c_i(x) y^i with c_i in Q[x_1..x_n]. Trailing zero
/// coefficients are trimmed, so degree() is deg_y P.
class PolyInY {
 public:
  PolyInY() = default;
  PolyInY(std::size_t nvars, std::vector<MPoly> coeffs);

  /// Splits a polynomial whose last variable is y.
  static PolyInY from_mpoly(const MPoly& p);
  MPoly to_mpoly() const;

  std::size_t nvars() const { return nvars_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<MPoly>& coeffs() const { return coeffs_; }
  /// c_i, or the zero polynomial when i > degree.
  MPoly coeff(int i) const;

  PolyInY derivative_y() const;
  /// ∂P/∂x_var, coefficientwise.
  PolyInY derivative_x(std::size_t var) const;
  /// P(x, shift + y).
  PolyInY recentre(const MPoly& shift) const;
  /// c^d P(x, y/c) for d = deg_y P: the root is multiplied by c.
  PolyInY scale_root(const Rational& c) const;
  /// P(x, value) as a polynomial.
  MPoly evaluate(const MPoly& value) const;
  /// P with every coefficient multiplied by the lcm of all denominators.
  PolyInY integer_cleared() const;

  friend bool operator==(const PolyInY&, const PolyInY&) = default;

 private:
  void trim();
  std::size_t nvars_ = 0;
  std::vector<MPoly> coeffs_;
};

/// Univariate polynomial in x as an exact series in x.
PuiseuxSeries to_series(const MPoly& univariate);

/// P(x, ξ) for univariate x, keeping exponents <= upto (exact when absent).
PuiseuxSeries evaluate(const PolyInY& p, const PuiseuxSeries& xi,
                       const std::optional<Rational>& upto = std::nullopt);

/// P(x, f) truncated at f's cap, for series in several variables.
TSeries evaluate(const PolyInY& p, const TSeries& f);

/// Squarefreeness of P in y over Q(x): the discriminant does not vanish
/// identically. Decided by specializing x at sample points where the
/// leading coefficient survives; a squarefree specialization proves it.
bool is_squarefree_in_y(const PolyInY& p);

}  // namespace eisenbox
