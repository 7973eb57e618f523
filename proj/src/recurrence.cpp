#include <algorithm>

#include "eisenbox/dfinite.hpp"
#include "eisenbox/error.hpp"

namespace eisenbox {

namespace {

// Falling factorial (ℓ + shift)(ℓ + shift - 1)...(ℓ + shift - k + 1) in ℓ.
UPoly falling_poly(long shift, int k) {
  UPoly r = UPoly::constant(1);
  for (int i = 0; i < k; ++i) r = r * UPoly({Rational(shift - i), Rational(1)});
  return r;
}

Rational apply_at(const PRecurrence& rec, long l, const std::vector<Rational>& f) {
  Rational s = 0;
  for (int i = 0; i <= rec.order(); ++i) s += rec.coeffs[i](Rational(l)) * f[l + i];
  return s;
}

}  // namespace

long validity_offset(const UPoly& leading) {
  if (leading.is_zero()) throw InputError("zero_recurrence", "leading recurrence coefficient is zero");
  long n0 = 0;
  for (const auto& r : integer_roots(leading)) n0 = std::max(n0, to_long(r) + 1);
  return n0;
}

PRecurrence make_recurrence(std::vector<UPoly> coeffs, std::vector<Rational> initial, long start) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.empty()) throw InputError("zero_recurrence", "all recurrence coefficients vanish");
  if (start < 0) throw InputError("bad_start", "start must be nonnegative");
  for (const auto& p : coeffs)
    for (const auto& c : p.coeffs())
      if (!is_integral(c)) throw InputError("bad_recurrence", "recurrence coefficients must be integers");

  PRecurrence rec;
  rec.coeffs = std::move(coeffs);
  const long e = rec.order();
  long from = std::max(start, validity_offset(rec.coeffs.back()));
  const long have = static_cast<long>(initial.size());
  for (long l = from; l + e < have; ++l)
    if (apply_at(rec, l, initial) != 0)
      throw InputError("inconsistent_initial_values",
                       "initial values violate the recurrence at index " + std::to_string(l + e));
  rec.start = std::max(from, have - e);
  if (have < rec.start + e)
    throw InputError("missing_initial_values",
                     "need f_0..f_" + std::to_string(rec.start + e - 1) + ", got " +
                         std::to_string(have) + " values");
  rec.initial = std::move(initial);
  return rec;
}

std::vector<Rational> expand(const PRecurrence& rec, std::size_t count) {
  if (rec.coeffs.empty()) throw InputError("zero_recurrence", "empty recurrence");
  const long e = rec.order();
  std::vector<Rational> f(rec.initial.begin(),
                          rec.initial.begin() + std::min(count, rec.initial.size()));
  const UPoly& lead = rec.coeffs.back();
  while (f.size() < count) {
    long l = static_cast<long>(f.size()) - e;
    if (l < rec.start) throw InputError("missing_initial_values", "not enough initial values");
    Rational d = lead(Rational(l));
    if (d == 0)
      throw MathError("vanishing_leading_coefficient",
                      "p_e vanishes at index " + std::to_string(l) + " inside the validity range");
    Rational s = 0;
    for (long i = 0; i < e; ++i) s += rec.coeffs[i](Rational(l)) * f[l + i];
    f.push_back(-s / d);
  }
  return f;
}

PRecurrence ode_to_recurrence(const LinearODE& ode) {
  if (ode.coeffs.empty() || ode.coeffs.back().is_zero())
    throw InputError("bad_ode", "leading ODE coefficient is zero");
  // x^j f^(k) contributes a_{k,j} fall(N + k - j, k) f_{N+k-j} at x^N.
  long smin = 0;
  bool first = true;
  long smax = 0;
  for (int k = 0; k <= ode.order(); ++k)
    for (int j = 0; j <= ode.coeffs[k].degree(); ++j) {
      if (ode.coeffs[k].coeff(j) == 0) continue;
      long s = k - j;
      smin = first ? s : std::min(smin, s);
      smax = first ? s : std::max(smax, s);
      first = false;
    }
  if (first) throw InputError("bad_ode", "ODE has no terms");
  // ℓ = N + base keeps ℓ >= 0 for every N >= 0.
  const long base = std::min(smin, 0L);
  std::vector<UPoly> p(static_cast<std::size_t>(smax - base + 1));
  for (int k = 0; k <= ode.order(); ++k)
    for (int j = 0; j <= ode.coeffs[k].degree(); ++j) {
      const Rational& c = ode.coeffs[k].coeff(j);
      if (c == 0) continue;
      long i = k - j - base;
      p[i] = p[i] + c * falling_poly(i, k);
    }
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  if (p.empty()) throw MathError("degenerate_ode", "every coefficient of the recurrence cancels");
  PRecurrence rec;
  rec.coeffs = std::move(p);
  rec.start = validity_offset(rec.coeffs.back());
  return rec;
}

}  // namespace eisenbox
