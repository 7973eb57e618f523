#include "eisenbox/uniseries.hpp"

#include <vector>

namespace eisenbox {

Integer ramification(const PuiseuxSeries& f) { return grid_denominator(f); }

PuiseuxSeries inverse(const PuiseuxSeries& f, const Rational& upto) {
  auto [v, c] = f.initial();
  Rational bound = upto;
  if (f.cap()) bound = std::min(bound, Rational(*f.cap() - 2 * v));
  PuiseuxSeries r(bound);
  Rational rel = bound + v;  // exponents needed in 1/(c t^v f̃), relative to -v
  if (rel < 0) return r;

  // On the grid (1/D)Z: f = c t^v Σ h_k t^{k/D} with h_0 = 1, and the
  // inverse g satisfies g_k = -Σ_{j=1..k} h_j g_{k-j}.
  Integer den = 1;
  for (const auto& [s, a] : f.terms()) {
    Rational d = s - v;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_den_mpz_t());
  }
  std::size_t n = floor(rel * den).get_ui() + 1;
  std::vector<std::pair<std::size_t, Rational>> h;
  for (const auto& [s, a] : f.terms()) {
    Integer k = Rational((s - v) * den).get_num();
    if (k == 0) continue;
    if (k >= n) break;
    h.emplace_back(k.get_ui(), a / c);
  }
  std::vector<Rational> g(n);
  g[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = 0;
    for (const auto& [j, hj] : h) {
      if (j > k) break;
      if (g[k - j] != 0) acc -= hj * g[k - j];
    }
    g[k] = acc;
  }
  Rational inv_c = 1 / c;
  for (std::size_t k = 0; k < n; ++k)
    if (g[k] != 0) r.add_term(Rational(make_rational(Integer(k), den) - v), g[k] * inv_c);
  return r;
}

}  // namespace eisenbox
