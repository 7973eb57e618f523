#include <doctest.h>

#include <set>
#include <thread>

#include "eisenbox/error.hpp"
#include "eisenbox/puiseux.hpp"
#include "support.hpp"

using namespace testing;

namespace {

PuiseuxSeries series(std::initializer_list<std::pair<const char*, const char*>> terms,
                     std::optional<Rational> cap = std::nullopt) {
  PuiseuxSeries s(cap);
  for (const auto& [e, c] : terms) s.add_term(Q(e), Q(c));
  return s;
}

Rational residual_order(const PolyInY& p, const PuiseuxSeries& xi, const Rational& upto) {
  PuiseuxSeries r = evaluate(p, xi, upto);
  return r.is_zero() ? upto + 1 : r.order();
}

}  // namespace

TEST_CASE("newton polygon examples") {
  NewtonPolygon a = newton_polygon(P("y^2 - x^3"));
  REQUIRE(a.segments.size() == 1);
  CHECK(a.segments[0].slope == Q("3/2"));
  CHECK(a.segments[0].lattice_length == 1);
  NewtonPolygon b = newton_polygon(P("y^2 - (1+x)"));
  REQUIRE(b.segments.size() == 1);
  CHECK(b.segments[0].slope == 0);
  NewtonPolygon c = newton_polygon(P("y^2 - x*y"));
  REQUIRE(c.segments.size() == 1);
  CHECK(c.segments[0].slope == 1);
  CHECK(c.segments[0].i_start == 1);
  CHECK(c.segments[0].i_end == 2);
  NewtonPolygon d = newton_polygon(P("y^3 - x*y + x^5"));
  REQUIRE(d.segments.size() == 2);
  CHECK(d.segments[0].slope < d.segments[1].slope);
  CHECK_THROWS(newton_polygon(PolyInY()));
  CHECK_THROWS(newton_polygon(P("x + 1 + 0*y")));
}

TEST_CASE("puiseux_expand y^2 - x^3") {
  PuiseuxResult r = puiseux_expand(P("y^2 - x^3"), 10);
  REQUIRE(r.branches.size() == 2);
  CHECK(r.extensions.empty());
  std::set<Rational> coeffs;
  for (const auto& b : r.branches) {
    CHECK(b.ram == 2);
    CHECK(b.series.terms().size() == 1);
    coeffs.insert(b.series.coeff(Q("3/2"), 0));
  }
  CHECK(coeffs == std::set<Rational>{-1, 1});
}

TEST_CASE("puiseux_expand y^2 - x^2(1+x)") {
  PuiseuxResult r = puiseux_expand(P("y^2 - x^2*(1+x)"), 8);
  REQUIRE(r.branches.size() == 2);
  std::vector<Rational> oracle = sqrt_coeffs(8);
  for (const auto& b : r.branches) {
    Rational sign = b.series.coeff(1, 0);
    REQUIRE((sign == 1 || sign == -1));
    for (long l = 1; l <= 8; ++l) CHECK(b.series.coeff(l, 0) == sign * oracle[l - 1]);
  }
}

TEST_CASE("puiseux_expand y - x and products") {
  PuiseuxResult r = puiseux_expand(P("y - x"), 5);
  REQUIRE(r.branches.size() == 1);
  CHECK(r.branches[0].exact);
  CHECK(r.branches[0].series == series({{"1", "1"}}));

  // All branches rational: the product of (y - ξ_i) reproduces P / lc.
  for (const char* text : {"y^2 - x^2*(1+x)", "(y - x)*(y + x^2)*(y - 1 - x)", "y^3 - x*y + x^5"}) {
    PolyInY p = P(text);
    const int order = 8;
    PuiseuxResult res = puiseux_expand(p, order);
    if (static_cast<int>(res.branches.size()) != p.degree()) continue;
    std::vector<PuiseuxSeries> prod{series({{"0", "1"}})};  // coefficients in y
    for (const auto& b : res.branches) {
      std::vector<PuiseuxSeries> next(prod.size() + 1);
      for (std::size_t i = 0; i < prod.size(); ++i) {
        next[i + 1] = next[i + 1] + prod[i];
        next[i] = next[i] - prod[i] * b.series;
      }
      prod = next;
    }
    Rational lc = p.coeffs().back().coeff(Exponent(1, 0));
    for (int i = 0; i <= p.degree(); ++i) {
      PuiseuxSeries expected = to_series((1 / lc) * p.coeff(i));
      PuiseuxSeries diff = prod[i] - expected;
      for (const auto& [e, c] : diff.terms()) CHECK(e > Rational(order) / 2);
    }
  }
}

TEST_CASE("puiseux back-substitution") {
  for (const char* text : {"y^2 - x^3", "y^2 - x^2*(1+x)", "y^3 - x*y + x^5", "x*y^2 + y - 1", "y^2 - x - x^2*y"}) {
    PolyInY p = P(text);
    for (int order : {4, 9}) {
      PuiseuxResult r = puiseux_expand(p, order);
      for (const auto& b : r.branches) {
        Rational target = Rational(order) / Rational(b.ram);
        CHECK(residual_order(p, b.series, target + 3) > target);
        CHECK(ramification(b.series) == b.ram);
      }
    }
  }
}

TEST_CASE("extension required is reported, not fabricated") {
  PuiseuxResult r = puiseux_expand(P("y^2 - 2*x^2"), 6);
  CHECK(r.branches.empty());
  REQUIRE(r.extensions.size() == 1);
  CHECK(r.extensions[0].degree == 2);
  CHECK(r.extensions[0].irreducible);
  CHECK(r.extensions[0].exponent == 1);
  CHECK(r.extensions[0].polynomial == UPoly({-2, 0, 1}));
  CHECK_THROWS_AS(puiseux_expand(P("(y - x)^2"), 4), NotSquarefree);
}

TEST_CASE("hensel_lift examples") {
  PuiseuxSeries s = hensel_lift(P("y^2 - (1+x)"), series({{"0", "1"}}), 5);
  std::vector<Rational> oracle = sqrt_coeffs(5);
  CHECK(oracle[5] == Q("7/256"));
  for (long l = 0; l <= 5; ++l) CHECK(s.coeff(l, 0) == oracle[l]);
  CHECK(hensel_lift(P("y - x^3"), PuiseuxSeries(), 10).truncated(10) == series({{"3", "1"}}).truncated(10));

  // y = (-1 + sqrt(1 + 4x)) / 2: coefficients (-1)^{ℓ+1} C_{ℓ-1}.
  PuiseuxSeries c = hensel_lift(P("y^2 + y - x"), PuiseuxSeries(), 12);
  for (long l = 1; l <= 12; ++l) {
    Rational expected = Rational(catalan(l - 1)) * (l % 2 == 1 ? 1 : -1);
    CHECK(c.coeff(l, 0) == expected);
  }
}

TEST_CASE("hensel_lift errors") {
  CHECK_THROWS_AS(hensel_lift(P("y^2 - x"), PuiseuxSeries(), 4), NonSimpleRoot);
  // y^2 - 2x^2 at seed x: e = 1 and the residual -x^2 has order 2 = 2e.
  CHECK_THROWS_AS(hensel_lift(P("y^2 - 2*x^2"), series({{"1", "1"}}), 6), SeedAccuracy);
  CHECK_NOTHROW(hensel_lift(P("y^2 - x^2 - x^3"), series({{"1", "1"}}), 6));
}

TEST_CASE("newton steps double the accuracy") {
  // One Newton step computed here, independently of the library.
  PolyInY p = P("y^3 + y - x - x^2");
  PuiseuxSeries s = series({{"1", "1"}});
  const Rational e = 0;
  Rational r0 = residual_order(p, s, 40);
  for (int step = 0; step < 3; ++step) {
    Rational upto = 2 * r0 + 2;
    PuiseuxSeries res = evaluate(p, s, upto);
    PuiseuxSeries d = evaluate(p.derivative_y(), s, upto);
    // The iterate is a polynomial; drop the cap so it counts as exact.
    PuiseuxSeries newton = (s - res * inverse(d, upto)).truncated(upto), next;
    for (const auto& [x, c] : newton.terms()) next.add_term(x, c);
    Rational r1 = residual_order(p, next, upto);
    CHECK(r1 >= 2 * r0 - 2 * e);
    PuiseuxSeries lifted = hensel_lift(p, series({{"1", "1"}}), r1);
    CHECK(lifted.truncated(r1 - 1) == next.truncated(r1 - 1));
    s = next;
    r0 = r1;
  }
}

TEST_CASE("AlgebraicSeries under concurrent extension") {
  AlgebraicSeries f(P("y^2 - (1+x)"), series({{"0", "1"}}));
  std::vector<std::vector<Rational>> seen(8);
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&, t] { seen[t] = f.coefficients(40 + 5 * t); });
  for (auto& t : threads) t.join();
  std::vector<Rational> oracle = sqrt_coeffs(75);
  for (int t = 0; t < 8; ++t) {
    REQUIRE(seen[t].size() == static_cast<std::size_t>(41 + 5 * t));
    for (std::size_t l = 0; l < seen[t].size(); ++l) CHECK(seen[t][l] == oracle[l]);
  }
  CHECK(f.reached());
  AlgebraicSeries exact(P("y - x^2"), PuiseuxSeries());
  CHECK(exact.coefficients(4) == std::vector<Rational>{0, 0, 1, 0, 0});
}
