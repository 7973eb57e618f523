#include "eisenbox/weierstrass.hpp"

#include <algorithm>

#include "eisenbox/error.hpp"

namespace eisenbox {

namespace {

// Polynomials truncated by the weight α_n + (d+1)|α'|.
class WeightedRing {
 public:
  WeightedRing(std::size_t n, int d, long limit) : n_(n), d_(d), limit_(limit) {}

  long weight(const Exponent& e) const {
    long rest = total_degree(e) - e[n_ - 1];
    return e[n_ - 1] + static_cast<long>(d_ + 1) * rest;
  }

  MPoly truncate(const MPoly& f) const {
    MPoly r(n_);
    for (const auto& [e, c] : f.terms())
      if (weight(e) <= limit_) r.add_term(e, c);
    return r;
  }

  MPoly mul(const MPoly& f, const MPoly& g) const {
    MPoly r(n_);
    for (const auto& [ef, cf] : f.terms()) {
      long wf = weight(ef);
      if (wf > limit_) continue;
      for (const auto& [eg, cg] : g.terms()) {
        if (wf + weight(eg) > limit_) continue;
        Exponent e(n_);
        for (std::size_t i = 0; i < n_; ++i) e[i] = ef[i] + eg[i];
        r.add_term(e, cf * cg);
      }
    }
    return r;
  }

  // Inverse of a unit: u = c (1 + v) with v of positive weight.
  MPoly inverse(const MPoly& u) const {
    Rational c = u.coeff(Exponent(n_, 0));
    MPoly v = (1 / c) * u - MPoly::constant(n_, 1);
    MPoly one = MPoly::constant(n_, 1);
    MPoly s = one;
    for (long k = 0; k <= limit_; ++k) {
      MPoly next = one - mul(v, s);
      if (next == s) break;
      s = std::move(next);
    }
    return (1 / c) * s;
  }

  // Σ_{α_n >= d} f_α x^{α - d e_n} and the remainder of x_n-degree < d.
  std::pair<MPoly, MPoly> split(const MPoly& f) const {
    MPoly quot(n_), rem(n_);
    for (const auto& [e, c] : f.terms()) {
      if (e[n_ - 1] >= d_) {
        Exponent s = e;
        s[n_ - 1] -= d_;
        quot.add_term(s, c);
      } else {
        rem.add_term(e, c);
      }
    }
    return {quot, rem};
  }

 private:
  std::size_t n_;
  int d_;
  long limit_;
};

}  // namespace

int regularity_order(const TSeries& f) {
  const std::size_t n = f.nvars();
  if (n == 0) throw InputError("no_variables", "series needs at least one variable");
  for (int k = 0; k <= f.cap(); ++k) {
    Exponent e(n, 0);
    e[n - 1] = k;
    if (f.coeff(e) != 0) return k;
  }
  throw RegularityFailure("f(0, ..., 0, x_n) vanishes up to degree " + std::to_string(f.cap()) +
                          "; a linear change of coordinates would make f regular in x_n");
}

Division divide(const TSeries& g, const TSeries& f, int cap) {
  if (g.nvars() != f.nvars()) throw InputError("ring_mismatch", "g and f have different nvars");
  if (cap < 0) throw InputError("bad_cap", "cap must be nonnegative");
  cap = std::min({cap, g.cap(), f.cap()});
  const std::size_t n = f.nvars();
  const int d = regularity_order(f.truncated(cap));
  const WeightedRing ring(n, d, static_cast<long>(d + 1) * cap + d);

  // Input terms above the output cap still matter below the weight limit.
  MPoly G = ring.truncate(g.polynomial());
  auto [u, h] = ring.split(ring.truncate(f.polynomial()));
  MPoly uinv = ring.inverse(u);
  MPoly hu = ring.mul(h, uinv);

  MPoly Q(n);
  for (long iter = 0;; ++iter) {
    MPoly next = ring.split(ring.truncate(G - ring.mul(hu, Q))).first;
    if (next == Q) break;
    if (iter > static_cast<long>(d + 1) * cap + d + 1)
      throw MathError("internal", "division fixed point did not settle");
    Q = std::move(next);
  }
  Division res;
  res.d = d;
  res.r = TSeries(ring.split(ring.truncate(G - ring.mul(hu, Q))).second, cap);
  res.q = TSeries(ring.mul(uinv, Q), cap);
  return res;
}

Preparation prepare(const TSeries& f, int cap) {
  cap = std::min(cap, f.cap());
  const std::size_t n = f.nvars();
  const int d = regularity_order(f.truncated(std::max(cap, 0)));
  Exponent top(n, 0);
  top[n - 1] = d;
  Division div = divide(TSeries(MPoly::monomial(top, 1), cap), f, cap);

  Preparation prep;
  prep.poly.d = d;
  prep.poly.nvars = n;
  prep.poly.cap = cap;
  std::vector<MPoly> a(d, MPoly(n));
  for (const auto& [e, c] : div.r.terms()) {
    Exponent s = e;
    s[n - 1] = 0;
    a[d - 1 - e[n - 1]].add_term(s, -c);
  }
  for (const auto& ai : a) prep.poly.a.emplace_back(ai, cap);
  prep.unit = div.q.inverse();
  return prep;
}

TSeries DistinguishedPolynomial::as_series() const {
  if (nvars == 0) throw InputError("no_variables", "distinguished polynomial has no variables");
  MPoly p(nvars);
  Exponent top(nvars, 0);
  top[nvars - 1] = d;
  p.add_term(top, 1);
  for (int i = 1; i <= d; ++i)
    for (const auto& [e, c] : a[i - 1].terms()) {
      Exponent s = e;
      s[nvars - 1] += d - i;
      p.add_term(s, c);
    }
  return TSeries(p, cap);
}

}  // namespace eisenbox
