#include "eisenbox/error.hpp"
#include "eisenbox/graded.hpp"

namespace eisenbox {

namespace {

Rational dot(const std::vector<Rational>& u, const std::vector<Rational>& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

void check_square(const RationalMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw InputError("bad_matrix", "matrix is not square");
}

}  // namespace

std::vector<Rational> MonomialMap::apply(const std::vector<Rational>& alpha) const {
  if (alpha.size() != omega.size()) throw InputError("bad_exponent", "exponent length differs from n");
  Rational s = lambda * dot(omega, alpha);
  std::vector<Rational> r = alpha;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += s * beta[i];
  return r;
}

std::vector<Rational> MonomialMap::apply_inverse(const std::vector<Rational>& alpha) const {
  if (alpha.size() != omega.size()) throw InputError("bad_exponent", "exponent length differs from n");
  Rational s = lambda * dot(omega, alpha) / chi;
  std::vector<Rational> r = alpha;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= s * beta[i];
  return r;
}

MonomialMap psi_lambda(const Rational& lambda, const std::vector<Rational>& omega,
                       const std::vector<Rational>& beta) {
  if (omega.size() != beta.size() || omega.empty())
    throw InputError("bad_dimension", "omega and beta must have the same positive length");
  MonomialMap m;
  m.lambda = lambda;
  m.omega = omega;
  m.beta = beta;
  m.chi = 1 + lambda * dot(beta, omega);
  if (m.chi == 0) throw MathError("singular_map", "chi(lambda) = 0");
  const std::size_t n = omega.size();
  m.matrix.assign(n, std::vector<Rational>(n, Rational(0)));
  m.inverse = m.matrix;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational r = lambda * omega[i] * beta[j];
      m.matrix[i][j] = (i == j ? 1 : 0) + r;
      m.inverse[i][j] = (i == j ? 1 : 0) - r / m.chi;
    }
  return m;
}

Rational determinant(RationalMatrix m) {
  check_square(m);
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

RationalMatrix matrix_inverse(RationalMatrix m) {
  check_square(m);
  const std::size_t n = m.size();
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) throw MathError("singular_matrix", "matrix is singular");
    std::swap(m[piv], m[c]);
    std::swap(inv[piv], inv[c]);
    Rational d = m[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      m[c][k] /= d;
      inv[c][k] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        m[r][k] -= f * m[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

}  // namespace eisenbox
