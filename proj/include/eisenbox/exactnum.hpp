#pragma once

// Exact scalars and elementary number theory.
//
// Integer and Rational are the GMP C++ classes. mpq_class keeps every value
// canonical (positive denominator, reduced), which is the invariant the rest
// of the library relies on.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eisenbox {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den reduced to canonical form. Throws InputError on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// "7", "-5/4": the text form used in JSON and in printed polynomials.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

/// Parses "n" or "n/d" (optional leading '-'). Throws InputError.
Rational parse_rational(const std::string& text);

Integer ceil(const Rational& q);
Integer floor(const Rational& q);

/// Checked conversion to a machine integer; throws InputError if out of range.
long to_long(const Integer& n);

Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, long exponent);

/// True when q has denominator 1.
inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

struct PrimeFactor {
  Integer prime;
  unsigned long multiplicity = 0;
  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Factorization with primes strictly increasing.
struct PrimeFactorization {
  std::vector<PrimeFactor> factors;

  /// Ω(n): number of prime factors counted with multiplicity.
  unsigned long omega_count() const;
  Integer product() const;
  friend bool operator==(const PrimeFactorization&, const PrimeFactorization&) = default;
};

/// Default bound on the size of a composite that trial division is allowed
/// to split after small primes have been stripped.
inline constexpr std::uint64_t kDefaultFactorCap = 1'000'000'000ULL;

/// Trial-division factorization. Small primes up to sqrt(cap) are stripped;
/// a survivor above that bound is accepted only if it passes a strong
/// primality test, otherwise UnfactoredResidue is thrown.
PrimeFactorization factorize(const Integer& n, std::uint64_t cap = kDefaultFactorCap);

/// True for primes (deterministic below 2^64, BPSW-strength above).
bool is_prime(const Integer& p);

/// p-adic valuation of q; nullopt stands for +∞ (q == 0).
std::optional<long> padic_val(const Rational& q, const Integer& p);

/// Positive lcm of nonzero integers; the empty sequence gives 1.
Integer lcm_accumulate(std::span<const Integer> values);

/// Primes p <= bound, built on first use and shared read-only afterwards.
const std::vector<std::uint32_t>& small_primes(std::uint32_t bound);

}  // namespace eisenbox
