#include "eisenbox/weights.hpp"

#include <algorithm>
#include <map>

#include "eisenbox/error.hpp"

namespace eisenbox {

WeightVector make_weights(std::vector<Rational> omega) {
  if (omega.empty()) throw InputError("bad_weights", "weight vector is empty");
  for (const auto& w : omega)
    if (w <= 0) throw InputError("bad_weights", "weights must be positive, got " + to_string(w));
  WeightVector r;
  r.omega = std::move(omega);
  return r;
}

namespace {

// Number of exponents of length n with |α| <= cap, saturating at limit + 1.
std::size_t box_size(std::size_t n, int cap, std::size_t limit) {
  Integer c = 1;  // binom(n + cap, n)
  for (std::size_t i = 1; i <= n; ++i) {
    c *= static_cast<unsigned long>(cap) + i;
    c /= static_cast<unsigned long>(i);
  }
  return c > Integer(static_cast<unsigned long>(limit)) ? limit + 1 : c.get_ui();
}

void walk(Exponent& e, std::size_t var, int remaining,
          const std::function<void(const Exponent&)>& fn) {
  if (var + 1 == e.size()) {
    e[var] = remaining;
    fn(e);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    e[var] = k;
    walk(e, var + 1, remaining - k, fn);
  }
}

}  // namespace

void for_each_exponent(std::size_t n, int cap, const std::function<void(const Exponent&)>& fn) {
  if (n == 0) {
    fn(Exponent{});
    return;
  }
  Exponent e(n, 0);
  for (int d = 0; d <= cap; ++d) walk(e, 0, d, fn);
}

WeightVector certify_injective(WeightVector w, int cap, std::size_t limit) {
  if (cap < 0) throw InputError("bad_cap", "negative cap");
  if (box_size(w.size(), cap, limit) > limit)
    throw InputError("too_large", "injectivity box exceeds " + std::to_string(limit) + " points");
  std::vector<Rational> values;
  for_each_exponent(w.size(), cap,
                    [&](const Exponent& e) { values.push_back(weighted_degree(e, w.omega)); });
  std::sort(values.begin(), values.end());
  w.cap = cap;
  w.injective_on_cap = std::adjacent_find(values.begin(), values.end()) == values.end();
  return w;
}

WeightVector make_injective_weights(std::size_t n, int cap) {
  if (n == 0) throw InputError("bad_weights", "need at least one variable");
  if (cap < 0) throw InputError("bad_cap", "negative cap");
  Integer base = 2 * cap + 1;
  std::vector<Rational> omega{Rational(1)};
  for (std::size_t i = 2; i <= n; ++i)
    omega.push_back(1 + make_rational(1, pow(base, static_cast<unsigned long>(n + 1 - i))));
  WeightVector w = make_weights(std::move(omega));
  constexpr std::size_t kExhaustive = 200'000;
  if (box_size(n, cap, kExhaustive) <= kExhaustive) {
    w = certify_injective(std::move(w), cap, kExhaustive);
    if (!w.injective_on_cap)
      throw MathError("weights_not_injective", "weight construction collided");
  } else {
    // Large boxes rely on the base-B numeral argument above.
    w.cap = cap;
    w.injective_on_cap = true;
  }
  return w;
}

Rational weighted_degree(const Exponent& e, const std::vector<Rational>& omega) {
  if (e.size() != omega.size())
    throw InputError("nvars_mismatch", "weight vector length differs from variable count");
  Rational s = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) s += omega[i] * e[i];
  return s;
}

Rational nu_omega(const MPoly& f, const WeightVector& w) {
  if (f.is_zero()) throw MathError("zero", "weighted order of zero");
  std::optional<Rational> best;
  for (const auto& [e, c] : f.terms()) {
    Rational d = weighted_degree(e, w.omega);
    if (!best || d < *best) best = d;
  }
  return *best;
}

Rational nu_omega(const TSeries& f, const WeightVector& w) {
  if (f.is_zero()) throw MathError("zero_to_cap", "series vanishes up to its cap");
  return nu_omega(f.polynomial(), w);
}

MPoly omega_initial(const MPoly& f, const WeightVector& w) {
  Rational v = nu_omega(f, w);
  MPoly r(f.nvars());
  for (const auto& [e, c] : f.terms())
    if (weighted_degree(e, w.omega) == v) r.add_term(e, c);
  return r;
}

bool is_omega_homogeneous(const MPoly& f, const WeightVector& w) {
  return graded_decompose(f, w).size() <= 1;
}

std::vector<std::pair<Rational, MPoly>> graded_decompose(const MPoly& f, const WeightVector& w) {
  std::map<Rational, MPoly> parts;
  for (const auto& [e, c] : f.terms()) {
    auto [it, ins] = parts.try_emplace(weighted_degree(e, w.omega), MPoly(f.nvars()));
    it->second.add_term(e, c);
  }
  return {parts.begin(), parts.end()};
}

PuiseuxSeries phi_substitute(const TSeries& h, const WeightVector& w) {
  if (!w.injective_on_cap || w.cap < h.cap())
    throw InputError("missing_certificate", "weights are not certified injective up to cap " +
                                                std::to_string(h.cap()));
  // Unknown terms have |α| > cap, hence weight >= (cap + 1) min ω. The
  // image is exact on the grid (1/D)Z strictly below that bound.
  Integer grid = 1;
  for (const auto& o : w.omega) mpz_lcm(grid.get_mpz_t(), grid.get_mpz_t(), o.get_den_mpz_t());
  Rational bound = Rational(h.cap() + 1) * *std::min_element(w.omega.begin(), w.omega.end());
  PuiseuxSeries r(make_rational(ceil(bound * grid) - 1, grid));
  for (const auto& [e, c] : h.terms()) r.add_term(weighted_degree(e, w.omega), c);
  return r;
}

}  // namespace eisenbox
