#include <functional>

#include "eisenbox/error.hpp"
#include "eisenbox/puiseux.hpp"

namespace eisenbox {

namespace {

// Taylor coefficients A_i = (1/i!) ∂^i P/∂y^i (ξ), so P(ξ + z) = Σ A_i z^i.
std::vector<PuiseuxSeries> taylor_at(const PolyInY& p, const PuiseuxSeries& xi) {
  std::vector<PuiseuxSeries> out;
  PolyInY der = p;
  Rational fact = 1;
  for (int i = 0; i <= p.degree(); ++i) {
    if (i > 0) {
      der = der.derivative_y();
      fact *= i;
    }
    out.push_back(evaluate(der, xi).scaled(1 / fact));
  }
  return out;
}

struct Expander {
  const PolyInY& p;
  int order;
  PuiseuxResult result;

  Rational horizon(const PuiseuxSeries& prefix) const {
    return Rational(order) / Rational(ramification(prefix));
  }

  void finish_exact(const PuiseuxSeries& xi) {
    result.branches.push_back({xi, ramification(xi), true});
  }

  void finish_truncated(const PuiseuxSeries& xi) {
    Rational t = horizon(xi);
    PuiseuxSeries s = xi.truncated(t);
    result.branches.push_back({s, ramification(s), false});
  }

  void step(const PuiseuxSeries& prefix, const std::optional<Rational>& last, int depth) {
    if (depth > 4 * order + 64)
      throw MathError("no_separation", "branches failed to separate; is P squarefree?");
    auto coeffs = taylor_at(p, prefix);
    bool root_here = coeffs[0].is_zero();
    if (root_here) finish_exact(prefix);

    NewtonPolygon np = newton_polygon(coeffs);
    std::vector<NewtonSegment> live;
    int continuing = 0;  // roots z of P(prefix + z) with ord z > last
    for (const auto& seg : np.segments)
      if (!last || seg.slope > *last) {
        live.push_back(seg);
        continuing = std::max(continuing, seg.i_end);
      }
    if (root_here) continuing -= np.points.front().first;

    if (!root_here && continuing == 1 && last) {
      const Rational& nu = coeffs[0].order();
      const Rational& e = coeffs[1].order();
      if (nu > 2 * e) {
        finish_truncated(hensel_lift(p, prefix, horizon(prefix)));
        return;
      }
      if (live.front().slope > horizon(prefix)) {
        finish_truncated(prefix);
        return;
      }
    }

    for (const auto& seg : live) {
      UPoly phi = characteristic_polynomial(coeffs, seg);
      auto split = rational_roots(phi);
      for (const auto& root : split.roots) {
        if (root.value == 0) continue;
        PuiseuxSeries next = prefix;
        next.add_term(seg.slope, root.value);
        step(next, seg.slope, depth + 1);
      }
      if (split.cofactor.degree() >= 1) {
        ExtensionReport rep;
        rep.prefix = prefix;
        rep.exponent = seg.slope;
        rep.polynomial = split.cofactor;
        rep.degree = split.cofactor.degree();
        rep.irreducible = rep.degree <= 3;
        result.extensions.push_back(std::move(rep));
      }
    }
  }
};

}  // namespace

PuiseuxResult puiseux_expand(const PolyInY& p, int order) {
  if (p.nvars() != 1) throw InputError("not_univariate", "expansion needs one x variable");
  if (order < 0) throw InputError("bad_order", "order must be nonnegative");
  if (p.degree() < 1) throw InputError("no_y", "polynomial has degree 0 in y");
  if (!is_squarefree_in_y(p)) throw NotSquarefree("P is not squarefree in y");
  Expander ex{p, order, {}};
  ex.step(PuiseuxSeries(), std::nullopt, 0);
  return std::move(ex.result);
}

AlgebraicSeries::AlgebraicSeries(PolyInY p, PuiseuxSeries seed) : p_(std::move(p)) {
  if (!is_squarefree_in_y(p_)) throw NotSquarefree("P is not squarefree in y");
  PuiseuxSeries residual = evaluate(p_, seed);
  if (residual.is_zero()) {
    memo_ = seed;  // exact root
    return;
  }
  // Validates the seed; the table starts at the seed's own horizon.
  Rational start = seed.is_zero() ? Rational(0) : seed.terms().rbegin()->first;
  memo_ = hensel_lift(p_, seed, start);
}

PuiseuxSeries AlgebraicSeries::truncation(const Rational& order) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!memo_.cap() || *memo_.cap() >= order) return memo_.truncated(order);
  memo_ = hensel_lift(p_, memo_, order);
  return memo_.truncated(order);
}

std::vector<Rational> AlgebraicSeries::coefficients(int n) const {
  PuiseuxSeries s = truncation(Rational(n));
  std::vector<Rational> out(n + 1);
  for (const auto& [e, c] : s.terms()) {
    if (!is_integral(e) || e < 0)
      throw MathError("not_a_power_series", "root has exponent " + to_string(e));
    out[e.get_num().get_ui()] = c;
  }
  return out;
}

std::optional<Rational> AlgebraicSeries::reached() const {
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.cap();
}

}  // namespace eisenbox
