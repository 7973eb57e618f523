#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eisenbox/poly_in_y.hpp"
#include "eisenbox/tseries.hpp"
#include "eisenbox/uniseries.hpp"
#include "eisenbox/weights.hpp"

namespace eisenbox {

/// Denominator certificate for a root f of P pinned by a seed:
/// a_final^{ℓ+1} f_ℓ ∈ Z for ℓ <= verified_to.
///
/// The pipeline clears the seed's denominators with c, recentres P at the
/// seed, reads a_raw x^e = in(∂P/∂y(x, 0)), and takes
///   s_min = min(ord(P(x,0) / (a² x^e)) / 2, ord(∂P/∂y(x,0) / (a x^e) - 1)),
///   λ = 1 / s_min (0 when both orders are infinite),
///   a_final = c * |a_raw|^k with k = max(⌈λ⌉, 1).
/// `k` is raised further only if the expansion check fails; `escalated`
/// records that.
struct EisensteinCertificate {
  Integer a_raw = 1;
  Rational e = 0;
  std::optional<Rational> s_min;  // nullopt: +∞
  Rational lambda = 0;
  Integer clearing = 1;           // c
  long exponent = 1;              // k
  Integer a_final = 1;
  int verified_to = 0;
  bool verified = false;
  bool escalated = false;

  friend bool operator==(const EisensteinCertificate&, const EisensteinCertificate&) = default;
};

/// Certificate for a univariate root. The seed must have integral
/// exponents >= 0 and satisfy ν(P(seed)) > 2 ord ∂P/∂y(seed).
EisensteinCertificate certify(const PolyInY& p, const PuiseuxSeries& seed, int order);

/// The pipeline alone, on P(t, y) with series coefficients in t (rational
/// exponents allowed). No verification is performed.
EisensteinCertificate certify_pipeline(const std::vector<PuiseuxSeries>& coeffs,
                                       const PuiseuxSeries& seed);

struct VerifyResult {
  bool pass = true;
  long index = -1;     // first failing ℓ
  Rational witness;    // a^{ℓ+1} f_ℓ at the failure
};

/// Checks a^{ℓ+1} f_ℓ ∈ Z for ℓ = 0 .. N.
VerifyResult verify(const std::vector<Rational>& coeffs, const Integer& a);

/// Checks b^{⌈s⌉+1} f_s ∈ Z on every term of a series with rational
/// exponents s >= 0.
VerifyResult verify_graded(const PuiseuxSeries& f, const Integer& b);

struct VerifyMultiResult {
  bool pass = true;
  Exponent exponent;   // first failing α in grlex order
  Rational witness;    // a^{|α|+1} f_α at the failure
};

/// Checks a^{|α|+1} f_α ∈ Z for |α| <= cap.
VerifyMultiResult verify_multi(const TSeries& f, const Integer& a);

/// Power-series root of P(x_1..x_n, y) with f(0) = seed, to total degree
/// cap, by Newton iteration. Throws NonSimpleRoot if ∂P/∂y(0, seed) = 0 and
/// SeedAccuracy if P(0, seed) != 0.
TSeries multivariate_root(const PolyInY& p, const Rational& seed, int cap);

struct MultiCertificate {
  WeightVector omega;
  EisensteinCertificate image;  // certificate b = image.a_final of φ(f)
  Integer b = 1;
  Integer a_final = 1;          // b²
  TSeries expansion;
  bool verified = false;
};

/// Several variables, through φ(h) = h(t^{ω_1}, ..., t^{ω_n}) with
/// make_injective_weights(n, cap). Since ⟨α,ω⟩ <= 2|α|, a base b for the
/// image gives a_final = b².
MultiCertificate certify_multi(const PolyInY& p, const Rational& seed, int cap);

/// Reduced denominators b_ℓ, running lcm and prime support.
struct DenominatorProfile {
  std::vector<Integer> denominators;
  std::vector<Integer> running_lcm;
  std::vector<Integer> support;               // sorted primes
  std::vector<std::size_t> support_size;      // |support| after each ℓ
};

DenominatorProfile denominator_profile(const std::vector<Rational>& coeffs,
                                       std::uint64_t factor_cap = kDefaultFactorCap);

struct SearchResult {
  std::optional<Integer> found;
  std::size_t tested = 0;
  /// For each rejected candidate: the first ℓ where b_ℓ ∤ a^{ℓ+1}.
  std::vector<std::pair<Integer, long>> rejected;
};

/// Smallest a <= bound, among integers whose prime factors lie in the
/// observed support, with b_ℓ | a^{ℓ+1} on the whole profile. A miss is
/// evidence against an Eisenstein base, not a proof.
SearchResult search(const DenominatorProfile& profile, const Integer& bound);

struct LinearFit {
  long lambda = 0;   // β(ℓ) <= λ ℓ + μ on the range
  long mu = 0;
  Rational slope;    // exact max (β(ℓ) - μ) / ℓ
};

struct WeakEisensteinReport {
  std::vector<Integer> support;
  bool finite_on_range = true;     // no new prime in the second half
  std::vector<long> beta;          // max_p ν_p(b_ℓ)
  std::optional<LinearFit> fit;    // only when finite_on_range
  std::vector<std::size_t> support_size;
};

WeakEisensteinReport weakly_eisenstein_check(const DenominatorProfile& profile);

}  // namespace eisenbox
