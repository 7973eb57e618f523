#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "eisenbox/error.hpp"
#include "eisenbox/exactnum.hpp"

namespace eisenbox {

inline bool is_zero(const Rational& q) { return q == 0; }

/// Univariate series Σ c_s t^s with rational exponents s and finite support.
///
/// `cap` is the exactness horizon: coefficients at exponents <= cap are
/// known, anything above it is unknown and never stored. An absent cap means
/// the value is exact (a finite Puiseux/Laurent polynomial).
///
/// The coefficient type needs +, -, * and a free `is_zero`.
template <class C>
class UniSeries {
 public:
  using TermMap = std::map<Rational, C>;

  UniSeries() = default;
  explicit UniSeries(std::optional<Rational> cap) : cap_(std::move(cap)) {}

  static UniSeries monomial(const Rational& s, C c, std::optional<Rational> cap = std::nullopt) {
    UniSeries r(std::move(cap));
    r.add_term(s, std::move(c));
    return r;
  }

  const TermMap& terms() const { return terms_; }
  const std::optional<Rational>& cap() const { return cap_; }
  bool is_exact() const { return !cap_.has_value(); }
  bool is_zero() const { return terms_.empty(); }

  /// Least exponent with a nonzero coefficient. Throws MathError ("zero" for
  /// an exact zero, "zero_to_cap" when only known to vanish up to the cap).
  const Rational& order() const {
    if (terms_.empty()) {
      if (cap_) throw MathError("zero_to_cap", "series vanishes up to its cap " + to_string(*cap_));
      throw MathError("zero", "order of the zero series");
    }
    return terms_.begin()->first;
  }
  /// (ord, coefficient of t^ord).
  std::pair<Rational, C> initial() const {
    const Rational& s = order();
    return {s, terms_.begin()->second};
  }

  C coeff(const Rational& s, const C& zero) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? zero : it->second;
  }

  void add_term(const Rational& s, C c) {
    if (cap_ && s > *cap_) return;
    if (eisenbox::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(s, std::move(c));
    if (!inserted) {
      it->second = it->second + c;
      if (eisenbox::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Drops terms above `bound` and lowers the cap to it.
  UniSeries truncated(const Rational& bound) const {
    UniSeries r(cap_ ? std::min(*cap_, bound) : bound);
    for (const auto& [s, c] : terms_) {
      if (s > *r.cap_) break;
      r.terms_.emplace_hint(r.terms_.end(), s, c);
    }
    return r;
  }

  UniSeries operator-() const {
    UniSeries r = *this;
    for (auto& [s, c] : r.terms_) c = -c;
    return r;
  }

  friend UniSeries operator+(const UniSeries& a, const UniSeries& b) {
    UniSeries r(min_cap(a.cap_, b.cap_));
    for (const auto& [s, c] : a.terms_) r.add_term(s, c);
    for (const auto& [s, c] : b.terms_) r.add_term(s, c);
    return r;
  }
  friend UniSeries operator-(const UniSeries& a, const UniSeries& b) { return a + (-b); }

  /// Product. Unknown tails contribute only above cap_a + ord_b and
  /// cap_b + ord_a, so the result cap is the smaller of the two.
  friend UniSeries operator*(const UniSeries& a, const UniSeries& b) {
    return multiply(a, b, std::nullopt);
  }

  /// Product keeping only exponents <= bound (and below the derived cap).
  static UniSeries multiply(const UniSeries& a, const UniSeries& b,
                            const std::optional<Rational>& bound) {
    std::optional<Rational> cap = product_cap(a, b);
    if (bound) cap = min_cap(cap, bound);
    UniSeries r(cap);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    const Rational& oa = a.terms_.begin()->first;
    const Rational& ob = b.terms_.begin()->first;
    if (cap && oa + ob > *cap) return r;

    // Dense convolution on the common grid when it is not too sparse.
    Integer den = 1;
    for (const auto* f : {&a, &b})
      for (const auto& [s, c] : f->terms_) {
        Rational rel = s - f->terms_.begin()->first;
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), rel.get_den_mpz_t());
      }
    Rational span = cap ? Rational(*cap - oa - ob)
                        : Rational(a.terms_.rbegin()->first - oa + b.terms_.rbegin()->first - ob);
    Integer slots = floor(span * den) + 1;
    std::size_t work = a.terms_.size() * b.terms_.size();
    if (slots <= Integer(static_cast<unsigned long>(4 * work + 64)) && slots <= 4'000'000) {
      std::size_t n = slots.get_ui();
      auto index = [&den](const Rational& rel) { return Rational(rel * den).get_num().get_ui(); };
      std::vector<std::pair<std::size_t, const C*>> ia, ib;
      for (const auto& [s, c] : a.terms_) ia.emplace_back(index(s - oa), &c);
      for (const auto& [s, c] : b.terms_) ib.emplace_back(index(s - ob), &c);
      std::vector<std::optional<C>> acc(n);
      for (const auto& [i, ca] : ia) {
        if (i >= n) break;
        for (const auto& [j, cb] : ib) {
          if (i + j >= n) break;
          if (acc[i + j]) *acc[i + j] = *acc[i + j] + (*ca) * (*cb);
          else acc[i + j] = (*ca) * (*cb);
        }
      }
      Rational base = oa + ob;
      for (std::size_t k = 0; k < n; ++k)
        if (acc[k] && !eisenbox::is_zero(*acc[k]))
          r.terms_.emplace_hint(r.terms_.end(), base + make_rational(Integer(k), den), std::move(*acc[k]));
      return r;
    }

    for (const auto& [sa, ca] : a.terms_) {
      if (cap && sa + ob > *cap) break;
      for (const auto& [sb, cb] : b.terms_) {
        Rational s = sa + sb;
        if (cap && s > *cap) break;
        r.add_term(s, ca * cb);
      }
    }
    return r;
  }

  UniSeries scaled(const C& k) const {
    UniSeries r(cap_);
    for (const auto& [s, c] : terms_) r.add_term(s, c * k);
    return r;
  }

  /// Multiplication by t^shift.
  UniSeries shifted(const Rational& shift) const {
    UniSeries r(cap_ ? std::optional<Rational>(*cap_ + shift) : std::nullopt);
    for (const auto& [s, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), s + shift, c);
    return r;
  }

  friend bool operator==(const UniSeries&, const UniSeries&) = default;

 private:
  static std::optional<Rational> min_cap(const std::optional<Rational>& a,
                                         const std::optional<Rational>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
  }

  // Lowest exponent the (possibly unknown) series can have.
  static std::optional<Rational> floor_order(const UniSeries& f) {
    if (!f.terms_.empty()) return f.terms_.begin()->first;
    return f.cap_;  // nullopt: exact zero
  }

  static std::optional<Rational> product_cap(const UniSeries& a, const UniSeries& b) {
    std::optional<Rational> cap;
    auto ob = floor_order(b);
    auto oa = floor_order(a);
    if (a.cap_ && ob) cap = min_cap(cap, *a.cap_ + *ob);
    if (b.cap_ && oa) cap = min_cap(cap, *b.cap_ + *oa);
    return cap;
  }

  std::optional<Rational> cap_;
  TermMap terms_;
};

/// Ramified univariate series over Q: Σ a_ℓ x^{ℓ/q}, stored by exponent.
using PuiseuxSeries = UniSeries<Rational>;

/// Series on a rational exponent grid over a ground ring C.
template <class C>
using RGSeries = UniSeries<C>;

/// Smallest q with every exponent in (1/q)Z; 1 for the zero series.
Integer ramification(const PuiseuxSeries& f);

/// Grid denominator of an arbitrary rational-exponent series.
template <class C>
Integer grid_denominator(const UniSeries<C>& f) {
  Integer d = 1;
  for (const auto& [s, c] : f.terms())
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), s.get_den_mpz_t());
  return d;
}

/// Inverse of a series over Q with terms up to exponent `upto`. The result
/// cap is also limited by the operand's cap: cap - 2*ord.
PuiseuxSeries inverse(const PuiseuxSeries& f, const Rational& upto);

}  // namespace eisenbox
