#include "eisenbox/exactnum.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "eisenbox/error.hpp"

namespace eisenbox {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InputError("zero_denominator", "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Integer parse_integer(const std::string& text, const std::string& whole) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw InputError("bad_rational", "malformed rational '" + whole + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw InputError("bad_rational", "malformed rational '" + whole + "'");
  }
  Integer n;
  n.set_str(text[0] == '+' ? text.substr(1) : text, 10);
  return n;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  std::string den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-')
    throw InputError("bad_rational", "negative denominator in '" + text + "'");
  return make_rational(num, parse_integer(den_text, text));
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

long to_long(const Integer& n) {
  if (!n.fits_slong_p()) throw InputError("overflow", "integer " + n.get_str() + " out of range");
  return n.get_si();
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw MathError("division_by_zero", "zero to a negative power");
    Rational inv = 1 / base;
    return pow(inv, -exponent);
  }
  auto e = static_cast<unsigned long>(exponent);
  return make_rational(pow(Integer(base.get_num()), e), pow(Integer(base.get_den()), e));
}

unsigned long PrimeFactorization::omega_count() const {
  unsigned long total = 0;
  for (const auto& f : factors) total += f.multiplicity;
  return total;
}

Integer PrimeFactorization::product() const {
  Integer r = 1;
  for (const auto& f : factors) r *= pow(f.prime, f.multiplicity);
  return r;
}

const std::vector<std::uint32_t>& small_primes(std::uint32_t bound) {
  // One sieve per requested bound; tables are immutable once published.
  static std::mutex mutex;
  static std::map<std::uint32_t, std::vector<std::uint32_t>> tables;
  std::lock_guard lock(mutex);
  auto it = tables.find(bound);
  if (it != tables.end()) return it->second;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return tables.emplace(bound, std::move(primes)).first->second;
}

bool is_prime(const Integer& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

PrimeFactorization factorize(const Integer& n, std::uint64_t cap) {
  if (n <= 0) throw InputError("nonpositive", "factorize expects n >= 1, got " + n.get_str());
  PrimeFactorization result;
  Integer rest = n;
  auto bound = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(cap))) + 1;
  for (std::uint32_t p : small_primes(bound)) {
    if (rest == 1) break;
    if (Integer(p) * p > rest) break;
    unsigned long m = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++m;
    }
    if (m > 0) result.factors.push_back({Integer(p), m});
  }
  if (rest != 1) {
    // Either the loop ran out because p*p > rest (rest is prime), or rest has
    // no factor below the sieve bound.
    Integer b = bound;
    if (b * b > rest || is_prime(rest)) {
      result.factors.push_back({rest, 1});
    } else {
      throw UnfactoredResidue(rest.get_str());
    }
  }
  return result;
}

std::optional<long> padic_val(const Rational& q, const Integer& p) {
  if (!is_prime(p)) throw InputError("not_prime", p.get_str() + " is not prime");
  if (q == 0) return std::nullopt;
  auto count = [&p](Integer v) {
    long m = 0;
    while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
      ++m;
    }
    return m;
  };
  return count(abs(q.get_num())) - count(q.get_den());
}

Integer lcm_accumulate(std::span<const Integer> values) {
  Integer l = 1;
  for (const auto& v : values) {
    if (v == 0) throw InputError("zero_input", "lcm of a zero value");
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_mpz_t());
  }
  return l;
}

}  // namespace eisenbox
