#include <algorithm>

#include "eisenbox/eisenstein.hpp"
#include "eisenbox/error.hpp"
#include "eisenbox/puiseux.hpp"

namespace eisenbox {

namespace {

constexpr long kMaxEscalation = 64;

Integer series_denominator_lcm(const PuiseuxSeries& s) {
  Integer l = 1;
  for (const auto& [e, c] : s.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

PuiseuxSeries phi_polynomial(const MPoly& p, const WeightVector& w) {
  PuiseuxSeries r;
  for (const auto& [e, c] : p.terms()) r.add_term(weighted_degree(e, w.omega), c);
  return r;
}

void check_power_series_seed(const PuiseuxSeries& seed) {
  for (const auto& [e, c] : seed.terms())
    if (!is_integral(e) || e < 0)
      throw InputError("bad_seed", "seed exponents must be natural numbers, got " + to_string(e));
}

}  // namespace

EisensteinCertificate certify_pipeline(const std::vector<PuiseuxSeries>& coeffs,
                                       const PuiseuxSeries& seed) {
  if (coeffs.size() < 2) throw InputError("no_y", "polynomial has degree 0 in y");
  const std::size_t d = coeffs.size() - 1;
  EisensteinCertificate cert;

  // c f^(0) has integer coefficients; c^d P(x, y/c) has the root c f.
  cert.clearing = series_denominator_lcm(seed);
  const Integer& c = cert.clearing;
  std::vector<PuiseuxSeries> q;
  Integer l = 1;
  for (std::size_t i = 0; i <= d; ++i) {
    q.push_back(coeffs[i].scaled(Rational(pow(c, d - i))));
    Integer di = series_denominator_lcm(q.back());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), di.get_mpz_t());
  }
  for (auto& qi : q) qi = qi.scaled(Rational(l));
  PuiseuxSeries f0 = seed.scaled(Rational(c));

  // Recentre: P1(x, y) = P(x, f0 + y); only the y^0 and y^1 parts matter.
  std::vector<PuiseuxSeries> powers{PuiseuxSeries::monomial(0, 1)};
  for (std::size_t i = 1; i <= d; ++i) powers.push_back(powers.back() * f0);
  PuiseuxSeries p0, p1;
  for (std::size_t i = 0; i <= d; ++i) {
    p0 = p0 + q[i] * powers[i];
    if (i >= 1) p1 = p1 + (q[i] * powers[i - 1]).scaled(Rational(binomial(i, 1)));
  }
  if (p1.is_zero()) throw NonSimpleRoot("dP/dy vanishes at the seed");

  auto [e, a] = p1.initial();
  if (!is_integral(a)) throw MathError("internal", "initial coefficient is not integral");
  cert.e = e;
  cert.a_raw = a.get_num();

  std::optional<Rational> s_min;
  if (!p0.is_zero()) {
    Rational nu = p0.order();
    if (nu <= 2 * e)
      throw SeedAccuracy("seed residual order " + to_string(nu) +
                         " does not exceed 2*ord(dP/dy) = " + to_string(Rational(2 * e)));
    s_min = (nu - e) / 2;
  }
  PuiseuxSeries unit_part = p1 - PuiseuxSeries::monomial(e, a);
  if (!unit_part.is_zero()) {
    Rational s = unit_part.order() - e;
    if (!s_min || s < *s_min) s_min = s;
  }
  cert.s_min = s_min;
  cert.lambda = s_min ? Rational(1 / *s_min) : Rational(0);
  cert.exponent = std::max(to_long(ceil(cert.lambda)), 1L);
  cert.a_final = c * pow(Integer(abs(cert.a_raw)), static_cast<unsigned long>(cert.exponent));
  return cert;
}

EisensteinCertificate certify(const PolyInY& p, const PuiseuxSeries& seed, int order) {
  if (p.nvars() != 1) throw InputError("not_univariate", "certify needs one x variable");
  if (order < 0) throw InputError("bad_order", "order must be nonnegative");
  check_power_series_seed(seed);
  if (!is_squarefree_in_y(p)) throw NotSquarefree("P is not squarefree in y");

  std::vector<PuiseuxSeries> coeffs;
  for (const auto& c : p.coeffs()) coeffs.push_back(to_series(c));
  EisensteinCertificate cert = certify_pipeline(coeffs, seed);

  PuiseuxSeries f = hensel_lift(p, seed, Rational(order));
  std::vector<Rational> fl(order + 1);
  for (const auto& [e, c] : f.terms()) fl[e.get_num().get_ui()] = c;

  Integer base = abs(cert.a_raw);
  while (!verify(fl, cert.a_final).pass) {
    if (base == 1 || cert.exponent >= kMaxEscalation) {
      cert.verified_to = order;
      cert.verified = false;
      return cert;
    }
    ++cert.exponent;
    cert.escalated = true;
    cert.a_final = cert.clearing * pow(base, static_cast<unsigned long>(cert.exponent));
  }
  cert.verified_to = order;
  cert.verified = true;
  return cert;
}

VerifyResult verify(const std::vector<Rational>& coeffs, const Integer& a) {
  if (a <= 0) throw InputError("bad_base", "Eisenstein base must be positive");
  VerifyResult r;
  Integer power = a;  // a^{ℓ+1}
  for (std::size_t l = 0; l < coeffs.size(); ++l, power *= a) {
    const Rational& f = coeffs[l];
    if (f.get_den() == 1) continue;
    if (mpz_divisible_p(power.get_mpz_t(), f.get_den_mpz_t())) continue;
    r.pass = false;
    r.index = static_cast<long>(l);
    r.witness = f * Rational(power);
    return r;
  }
  return r;
}

VerifyResult verify_graded(const PuiseuxSeries& f, const Integer& b) {
  if (b <= 0) throw InputError("bad_base", "Eisenstein base must be positive");
  VerifyResult r;
  for (const auto& [s, c] : f.terms()) {
    if (s < 0) throw MathError("negative_exponent", "graded check needs exponents >= 0");
    Integer k = ceil(s) + 1;
    Rational v = c * Rational(pow(b, k.get_ui()));
    if (is_integral(v)) continue;
    r.pass = false;
    r.index = to_long(floor(s));
    r.witness = v;
    return r;
  }
  return r;
}

VerifyMultiResult verify_multi(const TSeries& f, const Integer& a) {
  if (a <= 0) throw InputError("bad_base", "Eisenstein base must be positive");
  VerifyMultiResult r;
  for (const auto& [e, c] : f.terms()) {
    Rational v = c * Rational(pow(a, static_cast<unsigned long>(total_degree(e) + 1)));
    if (is_integral(v)) continue;
    r.pass = false;
    r.exponent = e;
    r.witness = v;
    return r;
  }
  return r;
}

TSeries multivariate_root(const PolyInY& p, const Rational& seed, int cap) {
  if (cap < 0) throw InputError("bad_cap", "cap must be nonnegative");
  std::size_t n = p.nvars();
  Exponent zero(n, 0);
  Rational r0 = 0, d0 = 0;
  for (int i = p.degree(); i >= 0; --i) r0 = r0 * seed + p.coeff(i).coeff(zero);
  PolyInY dp = p.derivative_y();
  for (int i = dp.degree(); i >= 0; --i) d0 = d0 * seed + dp.coeff(i).coeff(zero);
  if (r0 != 0) throw SeedAccuracy("seed is not a root of P(0, y)");
  if (d0 == 0) throw NonSimpleRoot("seed is a multiple root of P(0, y)");

  TSeries f(MPoly::constant(n, seed), cap);
  // Each step at least doubles the order of the residual.
  for (int iter = 0; iter < 64; ++iter) {
    TSeries r = evaluate(p, f);
    if (r.is_zero()) return f;
    f = f - r * evaluate(dp, f).inverse();
  }
  throw MathError("no_convergence", "Newton iteration did not converge");
}

MultiCertificate certify_multi(const PolyInY& p, const Rational& seed, int cap) {
  if (cap < 0) throw InputError("bad_cap", "cap must be nonnegative");
  if (!is_squarefree_in_y(p)) throw NotSquarefree("P is not squarefree in y");
  MultiCertificate mc;
  mc.omega = make_injective_weights(p.nvars(), cap);

  std::vector<PuiseuxSeries> image;
  for (const auto& c : p.coeffs()) image.push_back(phi_polynomial(c, mc.omega));
  mc.image = certify_pipeline(image, PuiseuxSeries::monomial(0, seed));
  mc.expansion = multivariate_root(p, seed, cap);

  PuiseuxSeries phi_f = phi_substitute(mc.expansion, mc.omega);
  Integer base = abs(mc.image.a_raw);
  while (!verify_graded(phi_f, mc.image.a_final).pass) {
    if (base == 1 || mc.image.exponent >= kMaxEscalation) break;
    ++mc.image.exponent;
    mc.image.escalated = true;
    mc.image.a_final = mc.image.clearing * pow(base, static_cast<unsigned long>(mc.image.exponent));
  }
  mc.image.verified_to = cap;
  mc.image.verified = verify_graded(phi_f, mc.image.a_final).pass;
  mc.b = mc.image.a_final;
  mc.a_final = mc.b * mc.b;
  mc.verified = mc.image.verified && verify_multi(mc.expansion, mc.a_final).pass;
  return mc;
}

}  // namespace eisenbox
