#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "eisenbox/mpoly.hpp"
#include "eisenbox/tseries.hpp"
#include "eisenbox/uniseries.hpp"

namespace eisenbox {

/// Positive rational weights ω with an optional injectivity certificate:
/// α ↦ ⟨α, ω⟩ has no collisions on {α : |α| <= cap}.
struct WeightVector {
  std::vector<Rational> omega;
  int cap = 0;
  bool injective_on_cap = false;

  std::size_t size() const { return omega.size(); }
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// Weights without a certificate. Throws InputError unless every entry is
/// positive.
WeightVector make_weights(std::vector<Rational> omega);

/// Exhaustive pairwise-distinctness check on the box |α| <= cap; sets the
/// certificate when it holds. Throws InputError if the box has more than
/// `limit` points.
WeightVector certify_injective(WeightVector w, int cap, std::size_t limit = 4'000'000);

/// ω_1 = 1 and ω_i = 1 + B^{i-n-1} with B = 2*cap + 1 for i >= 2. Then
/// B^{n-1}⟨α,ω⟩ = |α| B^{n-1} + Σ_{i>=2} α_i B^{i-2} is a base-B numeral,
/// so the pairing is injective on the box and every ω_i lies in [1, 2].
WeightVector make_injective_weights(std::size_t n, int cap);

Rational weighted_degree(const Exponent& e, const std::vector<Rational>& omega);

/// ν_ω: minimal weighted degree over the support. Throws on zero input.
Rational nu_omega(const MPoly& f, const WeightVector& w);
Rational nu_omega(const TSeries& f, const WeightVector& w);

/// ω-initial form: the terms of weighted degree ν_ω(f).
MPoly omega_initial(const MPoly& f, const WeightVector& w);

bool is_omega_homogeneous(const MPoly& f, const WeightVector& w);

/// ω-homogeneous parts by strictly increasing weight; they sum to f.
std::vector<std::pair<Rational, MPoly>> graded_decompose(const MPoly& f, const WeightVector& w);

/// φ(h) = h(t^{ω_1}, ..., t^{ω_n}). Unknown terms of h have |α| > h.cap and
/// land at weight >= (h.cap + 1) min ω; the result cap is the last point of
/// the exponent grid below that.
/// Requires a certificate covering h.cap.
PuiseuxSeries phi_substitute(const TSeries& h, const WeightVector& w);

/// Calls fn on every exponent vector of length n with total degree <= cap,
/// in grlex order.
void for_each_exponent(std::size_t n, int cap, const std::function<void(const Exponent&)>& fn);

}  // namespace eisenbox
