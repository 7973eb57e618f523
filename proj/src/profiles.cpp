#include <cmath>
#include <set>

#include "eisenbox/dfinite.hpp"
#include "eisenbox/error.hpp"

namespace eisenbox {

GrowthReport prime_count_profile(const std::vector<Rational>& coeffs, std::uint64_t factor_cap,
                                 bool envelopes) {
  GrowthReport rep;
  std::set<Integer> primes;
  unsigned long s = 0;
  for (std::size_t l = 0; l < coeffs.size(); ++l) {
    Integer next;
    mpz_lcm(next.get_mpz_t(), rep.lcm.get_mpz_t(), coeffs[l].get_den_mpz_t());
    if (next != rep.lcm) {
      PrimeFactorization f = factorize(Integer(next / rep.lcm), factor_cap);
      s += f.omega_count();
      for (const auto& pf : f.factors) primes.insert(pf.prime);
      rep.lcm = next;
    }
    rep.s.push_back(s);
    double ratio = 0;
    if (l >= 2) {
      double ld = static_cast<double>(l);
      ratio = static_cast<double>(s) / (ld * std::log(ld));
      if (ratio > rep.K) {
        rep.K = ratio;
        rep.argmax = l;
      }
    }
    rep.ratio.push_back(ratio);
  }
  if (envelopes)
    for (const auto& p : primes) rep.envelope_slopes[p] = padic_profile(coeffs, p).slope;
  return rep;
}

PadicProfile padic_profile(const std::vector<Rational>& coeffs, const Integer& p) {
  if (p < 2 || !is_prime(p)) throw InputError("not_prime", to_string(p) + " is not prime");
  PadicProfile prof;
  prof.p = p;
  long v0 = 0;
  std::optional<Rational> slope;
  for (std::size_t l = 0; l < coeffs.size(); ++l) {
    const Rational& f = coeffs[l];
    if (f == 0) {
      prof.valuations.push_back(std::nullopt);
      continue;
    }
    Integer rest;
    long v = static_cast<long>(mpz_remove(rest.get_mpz_t(), f.get_num_mpz_t(), p.get_mpz_t())) -
             static_cast<long>(mpz_remove(rest.get_mpz_t(), f.get_den_mpz_t(), p.get_mpz_t()));
    prof.valuations.push_back(v);
    long clipped = std::min(v, 0L);
    if (!prof.anchor) {
      prof.anchor = static_cast<long>(l);
      v0 = clipped;
      continue;
    }
    Rational m = make_rational(clipped - v0, static_cast<long>(l) - *prof.anchor);
    if (!slope || m < *slope) slope = m;
  }
  prof.slope = slope.value_or(Rational(0));
  return prof;
}

}  // namespace eisenbox
