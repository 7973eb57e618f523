#include <doctest.h>

#include <numeric>

#include "eisenbox/error.hpp"
#include "support.hpp"

using namespace testing;

namespace {

// Naive trial division, every candidate divisor.
std::map<long, unsigned long> naive_factor(long n) {
  std::map<long, unsigned long> f;
  for (long d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      ++f[d];
      n /= d;
    }
  if (n > 1) ++f[n];
  return f;
}

long naive_val(Integer n, long p) {
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

TEST_CASE("rationals are canonical") {
  Rational q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(to_string(q) == "-3/2");
  CHECK(to_string(make_rational(0, -7)) == "0");
  CHECK(parse_rational("-10/4") == make_rational(-5, 2));
  CHECK_THROWS_AS(make_rational(1, 0), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK(ceil(Q("-3/2")) == -1);
  CHECK(floor(Q("-3/2")) == -2);
  CHECK(pow(Q("2/3"), -2) == Q("9/4"));
}

TEST_CASE("factorize examples") {
  CHECK(factorize(1).factors.empty());
  auto f128 = factorize(128);
  REQUIRE(f128.factors.size() == 1);
  CHECK(f128.factors[0] == PrimeFactor{2, 7});
  auto f720 = factorize(720);
  CHECK(f720.factors == std::vector<PrimeFactor>{{2, 4}, {3, 2}, {5, 1}});
  CHECK(f720.omega_count() == 7);
  CHECK_THROWS_AS(factorize(0), InputError);
  CHECK_THROWS_AS(factorize(-6), InputError);
}

TEST_CASE("factorize agrees with naive trial division") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> pick(1, 1'000'000);
  for (int i = 0; i < 400; ++i) {
    long n = pick(rng);
    auto f = factorize(n);
    CHECK(f.product() == n);
    auto oracle = naive_factor(n);
    REQUIRE(f.factors.size() == oracle.size());
    std::size_t k = 0;
    for (const auto& [p, m] : oracle) {
      CHECK(f.factors[k].prime == p);
      CHECK(f.factors[k].multiplicity == m);
      ++k;
    }
  }
}

TEST_CASE("large composite beyond the cap is reported") {
  // Product of two primes just above 10^6: trial division to sqrt(cap) misses both.
  Integer n = Integer(1000003) * Integer(1000033);
  CHECK_THROWS_AS(factorize(n, 1000), UnfactoredResidue);
  Integer big_prime("170141183460469231731687303715884105727");  // 2^127 - 1
  auto f = factorize(big_prime);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].prime == big_prime);
}

TEST_CASE("padic_val examples") {
  CHECK(padic_val(Q("5/4"), 2) == -2);
  CHECK_FALSE(padic_val(Q("0"), 3).has_value());
  CHECK(padic_val(Q("7/256"), 2) == -8);
  CHECK(padic_val(Q("18"), 3) == 2);
  CHECK_THROWS_AS(padic_val(Q("1"), 4), InputError);
}

TEST_CASE("padic_val is additive and ultrametric") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> pick(-5000, 5000), pos(1, 5000);
  for (long p : {2L, 3L, 5L, 7L}) {
    for (int i = 0; i < 200; ++i) {
      Rational a = make_rational(pick(rng), pos(rng)), b = make_rational(pick(rng), pos(rng));
      if (a == 0 || b == 0) continue;
      CHECK(*padic_val(a * b, p) == *padic_val(a, p) + *padic_val(b, p));
      if (a + b != 0) CHECK(*padic_val(a + b, p) >= std::min(*padic_val(a, p), *padic_val(b, p)));
    }
  }
}

TEST_CASE("Legendre formula for factorials") {
  // ν_p(n!) = Σ floor(n / p^k), against the valuation of the product itself.
  for (long n : {1L, 10L, 57L, 100L, 256L}) {
    for (long p : {2L, 3L, 5L, 97L}) {
      long legendre = 0;
      for (long pk = p; pk <= n; pk *= p) legendre += n / pk;
      CHECK(padic_val(Rational(factorial(n)), p) == legendre);
      CHECK(padic_val(Rational(1) / Rational(factorial(n)), p) == -legendre);
      CHECK(naive_val(factorial(n), p) == legendre);
    }
  }
}

TEST_CASE("lcm_accumulate") {
  std::vector<Integer> exp_dens{1, 1, 2, 6, 24};
  CHECK(lcm_accumulate(exp_dens) == 24);
  CHECK(lcm_accumulate(std::vector<Integer>{1}) == 1);
  CHECK(lcm_accumulate(std::vector<Integer>{4, 6}) == 12);
  CHECK(lcm_accumulate(std::vector<Integer>{-4, 6}) == 12);
  CHECK_THROWS_AS(lcm_accumulate(std::vector<Integer>{3, 0}), InputError);

  // Prime-wise maximum of multiplicities.
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> pick(1, 20000);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Integer> v;
    std::map<Integer, unsigned long> maxmult;
    long machine = 1;
    for (int i = 0; i < 4; ++i) {
      long n = pick(rng);
      v.emplace_back(n);
      machine = std::lcm(machine, n);
      for (const auto& f : factorize(n).factors)
        maxmult[f.prime] = std::max(maxmult[f.prime], f.multiplicity);
    }
    Integer expected = 1;
    for (const auto& [p, m] : maxmult) expected *= pow(p, m);
    CHECK(lcm_accumulate(v) == expected);
    CHECK(lcm_accumulate(v) == machine);
  }
}

TEST_CASE("is_prime and the prime table") {
  const auto& ps = small_primes(100);
  CHECK(ps.size() == 25);
  for (long n = 0; n < 2000; ++n) {
    bool naive = n >= 2;
    for (long d = 2; d * d <= n; ++d)
      if (n % d == 0) naive = false;
    CHECK(is_prime(n) == naive);
  }
  CHECK(is_prime(Integer("18446744073709551557")));  // largest prime below 2^64
  CHECK_FALSE(is_prime(Integer("18446744073709551559")));
}
