#include "eisenbox/poly_in_y.hpp"

#include <algorithm>
#include <random>

#include "eisenbox/error.hpp"
#include "eisenbox/upoly.hpp"

namespace eisenbox {

PolyInY::PolyInY(std::size_t nvars, std::vector<MPoly> coeffs)
    : nvars_(nvars), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c.nvars() != nvars_) throw InputError("nvars_mismatch", "coefficient ring mismatch");
  trim();
}

void PolyInY::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

PolyInY PolyInY::from_mpoly(const MPoly& p) {
  if (p.nvars() == 0) throw InputError("no_y", "polynomial has no y variable");
  std::size_t n = p.nvars() - 1;
  std::vector<MPoly> coeffs;
  for (const auto& [e, c] : p.terms()) {
    std::size_t k = static_cast<std::size_t>(e.back());
    if (coeffs.size() <= k) coeffs.resize(k + 1, MPoly(n));
    coeffs[k].add_term(Exponent(e.begin(), e.end() - 1), c);
  }
  return PolyInY(n, std::move(coeffs));
}

MPoly PolyInY::to_mpoly() const {
  MPoly r(nvars_ + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    for (const auto& [e, c] : coeffs_[k].terms()) {
      Exponent f = e;
      f.push_back(static_cast<int>(k));
      r.add_term(f, c);
    }
  return r;
}

MPoly PolyInY::coeff(int i) const {
  if (i < 0 || i > degree()) return MPoly(nvars_);
  return coeffs_[i];
}

PolyInY PolyInY::derivative_y() const {
  std::vector<MPoly> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
  return PolyInY(nvars_, std::move(d));
}

PolyInY PolyInY::derivative_x(std::size_t var) const {
  std::vector<MPoly> d;
  for (const auto& c : coeffs_) d.push_back(c.derivative(var));
  return PolyInY(nvars_, std::move(d));
}

PolyInY PolyInY::recentre(const MPoly& shift) const {
  if (is_zero()) return *this;
  // Horner: r <- r * (shift + y) + c_i.
  std::vector<MPoly> r{coeffs_.back()};
  for (int i = degree() - 1; i >= 0; --i) {
    std::vector<MPoly> next(r.size() + 1, MPoly(nvars_));
    for (std::size_t j = 0; j < r.size(); ++j) {
      next[j] += shift * r[j];
      next[j + 1] += r[j];
    }
    next[0] += coeffs_[i];
    r = std::move(next);
  }
  return PolyInY(nvars_, std::move(r));
}

PolyInY PolyInY::scale_root(const Rational& c) const {
  if (c == 0) throw MathError("division_by_zero", "root scale must be nonzero");
  std::vector<MPoly> r;
  int d = degree();
  for (int i = 0; i <= d; ++i) r.push_back(coeffs_[i] * pow(c, d - i));
  return PolyInY(nvars_, std::move(r));
}

MPoly PolyInY::evaluate(const MPoly& value) const {
  MPoly r(nvars_);
  for (int i = degree(); i >= 0; --i) r = r * value + coeffs_[i];
  return r;
}

PolyInY PolyInY::integer_cleared() const {
  Integer l = 1;
  for (const auto& c : coeffs_) {
    Integer d = c.denominator_lcm();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<MPoly> r;
  for (const auto& c : coeffs_) r.push_back(c * Rational(l));
  return PolyInY(nvars_, std::move(r));
}

PuiseuxSeries to_series(const MPoly& univariate) {
  if (univariate.nvars() > 1)
    throw InputError("not_univariate", "expected a polynomial in one variable");
  PuiseuxSeries s;
  for (const auto& [e, c] : univariate.terms()) s.add_term(e.empty() ? 0 : e[0], c);
  return s;
}

PuiseuxSeries evaluate(const PolyInY& p, const PuiseuxSeries& xi,
                       const std::optional<Rational>& upto) {
  if (p.is_zero()) return upto ? PuiseuxSeries(upto) : PuiseuxSeries();
  // With ord ξ < 0 each later multiplication lowers exponents, so the
  // intermediate Horner values must be kept beyond `upto`.
  Rational slack = 0;
  if (upto && !xi.is_zero() && xi.order() < 0) slack = -xi.order();
  auto bound_at = [&](int remaining) -> std::optional<Rational> {
    if (!upto) return std::nullopt;
    return *upto + slack * remaining;
  };
  int d = p.degree();
  PuiseuxSeries r = to_series(p.coeff(d));
  if (upto) r = r.truncated(*bound_at(d));
  for (int i = d - 1; i >= 0; --i) {
    r = PuiseuxSeries::multiply(r, xi, bound_at(i)) + to_series(p.coeff(i));
    if (upto) r = r.truncated(*bound_at(i));
  }
  return r;
}

TSeries evaluate(const PolyInY& p, const TSeries& f) {
  if (p.nvars() != f.nvars()) throw InputError("nvars_mismatch", "series ring mismatch");
  TSeries r(p.nvars(), f.cap());
  for (int i = p.degree(); i >= 0; --i) r = r * f + TSeries(p.coeff(i), f.cap());
  return r;
}

namespace {

UPoly specialize(const PolyInY& p, const std::vector<Rational>& point) {
  std::vector<Rational> c;
  for (const auto& ci : p.coeffs()) {
    Rational v = 0;
    for (const auto& [e, a] : ci.terms()) {
      Rational m = a;
      for (std::size_t j = 0; j < e.size(); ++j) m *= pow(point[j], e[j]);
      v += m;
    }
    c.push_back(v);
  }
  return UPoly(std::move(c));
}

bool squarefree(const UPoly& u) { return gcd(u, u.derivative()).degree() == 0; }

}  // namespace

bool is_squarefree_in_y(const PolyInY& p) {
  int d = p.degree();
  if (d <= 1) return true;
  std::size_t n = p.nvars();
  if (n == 0) return squarefree(specialize(p, {}));

  // When the leading coefficient survives, the discriminant specializes.
  int xdeg = 0;
  for (const auto& c : p.coeffs()) xdeg = std::max(xdeg, c.degree());
  long disc_degree = static_cast<long>(2 * d - 1) * xdeg;

  if (n == 1) {
    // A nonzero discriminant has at most disc_degree roots, so that many
    // plus one admissible points decide the question.
    long admissible = 0;
    for (long x0 = 0; admissible <= disc_degree; ++x0) {
      UPoly u = specialize(p, {Rational(x0)});
      if (u.degree() != d) continue;
      ++admissible;
      if (squarefree(u)) return true;
    }
    return false;
  }

  // Several variables: random points from a fixed-seed generator. Each
  // failure on a nonzero discriminant has probability <= disc_degree / 2^31.
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> dist(-(1L << 30), 1L << 30);
  int admissible = 0;
  for (int tries = 0; admissible < 8 && tries < 1000; ++tries) {
    std::vector<Rational> point;
    for (std::size_t j = 0; j < n; ++j) point.emplace_back(dist(rng));
    UPoly u = specialize(p, point);
    if (u.degree() != d) continue;
    ++admissible;
    if (squarefree(u)) return true;
  }
  return false;
}

}  // namespace eisenbox
