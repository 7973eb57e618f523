#include <algorithm>
#include <set>

#include "eisenbox/eisenstein.hpp"
#include "eisenbox/error.hpp"

namespace eisenbox {

namespace {

constexpr std::size_t kMaxCandidates = 1'000'000;
constexpr std::size_t kMaxRejectedKept = 1000;

void smooth_numbers(const std::vector<Integer>& primes, std::size_t from, const Integer& value,
                    const Integer& bound, std::vector<Integer>& out) {
  out.push_back(value);
  if (out.size() > kMaxCandidates)
    throw InputError("too_large", "candidate set exceeds " + std::to_string(kMaxCandidates));
  for (std::size_t i = from; i < primes.size(); ++i) {
    Integer next = value * primes[i];
    if (next > bound) break;  // primes are sorted
    smooth_numbers(primes, i, next, bound, out);
  }
}

}  // namespace

DenominatorProfile denominator_profile(const std::vector<Rational>& coeffs,
                                       std::uint64_t factor_cap) {
  DenominatorProfile prof;
  std::set<Integer> support;
  Integer l = 1;
  for (const auto& f : coeffs) {
    Integer b = f.get_den();
    Integer next;
    mpz_lcm(next.get_mpz_t(), l.get_mpz_t(), b.get_mpz_t());
    if (next != l) {
      // Any prime of b not yet in the support divides the increment.
      for (const auto& pf : factorize(Integer(next / l), factor_cap).factors) support.insert(pf.prime);
      l = next;
    }
    prof.denominators.push_back(b);
    prof.running_lcm.push_back(l);
    prof.support_size.push_back(support.size());
  }
  prof.support.assign(support.begin(), support.end());
  return prof;
}

SearchResult search(const DenominatorProfile& profile, const Integer& bound) {
  SearchResult res;
  if (bound < 1) return res;
  std::vector<Integer> candidates;
  smooth_numbers(profile.support, 0, Integer(1), bound, candidates);
  std::sort(candidates.begin(), candidates.end());
  for (const auto& a : candidates) {
    ++res.tested;
    long fail = -1;
    Integer power = a;
    for (std::size_t l = 0; l < profile.denominators.size(); ++l, power *= a) {
      const Integer& b = profile.denominators[l];
      if (b != 1 && !mpz_divisible_p(power.get_mpz_t(), b.get_mpz_t())) {
        fail = static_cast<long>(l);
        break;
      }
    }
    if (fail < 0) {
      res.found = a;
      return res;
    }
    if (res.rejected.size() < kMaxRejectedKept) res.rejected.emplace_back(a, fail);
  }
  return res;
}

WeakEisensteinReport weakly_eisenstein_check(const DenominatorProfile& profile) {
  WeakEisensteinReport rep;
  rep.support = profile.support;
  rep.support_size = profile.support_size;
  for (const auto& b : profile.denominators) {
    long beta = 0;
    Integer rest = b;
    for (const auto& p : profile.support) {
      if (rest == 1) break;
      long m = static_cast<long>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t()));
      beta = std::max(beta, m);
    }
    rep.beta.push_back(beta);
  }
  std::size_t n = rep.support_size.size();
  if (n >= 2) rep.finite_on_range = rep.support_size.back() == rep.support_size[(n - 1) / 2];
  if (rep.finite_on_range && n > 0) {
    LinearFit fit;
    fit.mu = rep.beta.front();
    fit.slope = 0;
    for (std::size_t l = 1; l < n; ++l) {
      Rational r(rep.beta[l] - fit.mu, static_cast<long>(l));
      r.canonicalize();
      fit.slope = std::max(fit.slope, r);
    }
    fit.lambda = to_long(ceil(fit.slope));
    rep.fit = fit;
  }
  return rep;
}

}  // namespace eisenbox
