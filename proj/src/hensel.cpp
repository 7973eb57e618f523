#include "eisenbox/error.hpp"
#include "eisenbox/puiseux.hpp"

namespace eisenbox {

namespace {

PuiseuxSeries exact_copy(const PuiseuxSeries& s) {
  PuiseuxSeries r;
  for (const auto& [e, c] : s.terms()) r.add_term(e, c);
  return r;
}

}  // namespace

PuiseuxSeries hensel_lift(const PolyInY& p, const PuiseuxSeries& seed, const Rational& target) {
  if (p.nvars() != 1) throw InputError("not_univariate", "lifting needs one x variable");
  PolyInY dp = p.derivative_y();
  PuiseuxSeries xi = exact_copy(seed);

  PuiseuxSeries d0 = evaluate(dp, xi);
  if (d0.is_zero()) throw NonSimpleRoot("dP/dy vanishes at the seed");
  Rational e = d0.order();
  PuiseuxSeries r0 = evaluate(p, xi);
  if (r0.is_zero()) return xi.truncated(target);
  if (r0.order() <= 2 * e)
    throw SeedAccuracy("seed residual order " + to_string(r0.order()) +
                       " does not exceed 2*ord(dP/dy) = " + to_string(Rational(2 * e)));

  // ξ must be right up to `goal` so that ord P(ξ) > target.
  Rational goal = e < 0 ? Rational(target - e) : target;
  while (true) {
    PuiseuxSeries r = evaluate(p, xi, Rational(goal + e));
    if (r.is_zero()) break;
    Rational nu = r.order();
    // Correction -r/dP(ξ) is meaningful up to 2ν - 3e (quadratic step).
    Rational w = std::min(Rational(2 * nu - 3 * e), goal);
    PuiseuxSeries d = evaluate(dp, xi, Rational(w - nu + 2 * e));
    PuiseuxSeries inv = inverse(d, w - nu);
    PuiseuxSeries delta = PuiseuxSeries::multiply(-r, inv, w);
    xi = exact_copy(xi + delta);
  }
  return xi.truncated(goal);
}

}  // namespace eisenbox
