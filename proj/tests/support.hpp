#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "eisenbox/frontend.hpp"
#include "eisenbox/mpoly.hpp"
#include "eisenbox/poly_in_y.hpp"

namespace testing {

using namespace eisenbox;

inline Rational Q(const std::string& s) { return parse_rational(s); }

inline PolyInY P(const std::string& text) { return PolyInY::from_mpoly(parse_poly_in_y(text).poly); }

inline MPoly M(const std::string& text, const std::vector<std::string>& names) {
  return parse_poly(text, names).poly;
}

inline Exponent E(std::initializer_list<int> e) { return Exponent(e); }

// binom(r, k) for rational r, straight from the product formula.
inline Rational binom(const Rational& r, long k) {
  Rational b = 1;
  for (long i = 0; i < k; ++i) b = b * (r - i) / (i + 1);
  return b;
}

inline Integer factorial(long n) {
  Integer f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Integer catalan(long n) {
  Integer c = 1;  // C_n = binom(2n, n) / (n + 1)
  for (long i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// Coefficients of sqrt(1 + x).
inline std::vector<Rational> sqrt_coeffs(long n) {
  std::vector<Rational> r;
  for (long l = 0; l <= n; ++l) r.push_back(binom(Q("1/2"), l));
  return r;
}

inline MPoly random_poly(std::mt19937& rng, std::size_t n, int deg, int terms, int coeff = 5) {
  std::uniform_int_distribution<int> c(-coeff, coeff), den(1, 3);
  MPoly p(n);
  for (int t = 0; t < terms; ++t) {
    Exponent e(n);
    int budget = deg;
    for (auto& v : e) {
      v = std::uniform_int_distribution<int>(0, budget)(rng);
      budget -= v;
    }
    std::shuffle(e.begin(), e.end(), rng);
    p.add_term(e, make_rational(c(rng), den(rng)));
  }
  return p;
}

}  // namespace testing
