#include <doctest.h>

#include <set>

#include "eisenbox/error.hpp"
#include "eisenbox/tseries.hpp"
#include "eisenbox/weights.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const std::vector<std::string> X1{"x"};
const std::vector<std::string> X2{"x1", "x2"};
const std::vector<std::string> X3{"x1", "x2", "x3"};

TSeries random_series(std::mt19937& rng, std::size_t n, int cap) {
  return TSeries(random_poly(rng, n, cap, 6), cap);
}

}  // namespace

TEST_CASE("grlex term order") {
  MPoly p = M("x2^2 + x1*x2 + x1^2 + x2 + 1", X2);
  std::vector<Exponent> order;
  for (const auto& [e, c] : p.terms()) order.push_back(e);
  CHECK(order == std::vector<Exponent>{E({0, 0}), E({0, 1}), E({2, 0}), E({1, 1}), E({0, 2})});
}

TEST_CASE("ord_in") {
  auto [d, form] = TSeries(M("x^2 + x^3", X1), 5).ord_in();
  CHECK(d == 2);
  CHECK(form == M("x^2", X1));
  auto [d2, form2] = TSeries(M("x1*x2 + x1^3", X2), 4).ord_in();
  CHECK(d2 == 2);
  CHECK(form2 == M("x1*x2", X2));

  PuiseuxSeries s;
  s.add_term(Q("1/2"), 3);
  s.add_term(1, 1);
  CHECK(s.initial().first == Q("1/2"));
  CHECK(s.initial().second == 3);
  CHECK(grid_denominator(s) == 2);

  try {
    TSeries(M("x^5", X1), 3).ord_in();
    FAIL("expected zero_to_cap");
  } catch (const MathError& e) {
    CHECK(e.code() == "zero_to_cap");
  }
  PuiseuxSeries capped(Q("3"));
  CHECK_THROWS_WITH_AS(capped.order(), doctest::Contains("vanishes up to its cap"), MathError);
  CHECK_THROWS_WITH_AS(PuiseuxSeries().order(), doctest::Contains("zero series"), MathError);
}

TEST_CASE("nu_omega examples") {
  CHECK(nu_omega(M("x1 + x2^2", X2), make_weights({3, 1})) == 2);
  CHECK(nu_omega(M("x1", X2), make_weights({1, 1})) == 1);
  CHECK(nu_omega(M("x1^2*x2", X2), make_weights({Q("1/2"), 2})) == 3);
  CHECK_THROWS(nu_omega(MPoly(2), make_weights({1, 1})));
}

TEST_CASE("nu_omega is multiplicative") {
  std::mt19937 rng(17);
  for (int i = 0; i < 60; ++i) {
    MPoly f = random_poly(rng, 3, 4, 4), g = random_poly(rng, 3, 4, 4);
    if (f.is_zero() || g.is_zero()) continue;
    WeightVector w = make_weights({Q("1"), Q("3/2"), Q("2/7")});
    CHECK(nu_omega(f * g, w) == nu_omega(f, w) + nu_omega(g, w));
  }
}

TEST_CASE("graded_decompose") {
  auto h = graded_decompose(M("x1 + x2", X2), make_weights({1, 1}));
  REQUIRE(h.size() == 1);
  CHECK(h[0].first == 1);
  auto s = graded_decompose(M("x1 + x2", X2), make_weights({1, 2}));
  REQUIRE(s.size() == 2);
  CHECK(s[0] == std::pair{Rational(1), M("x1", X2)});
  CHECK(s[1] == std::pair{Rational(2), M("x2", X2)});
  auto t = graded_decompose(M("x1^2 + x1*x2 + x2^3", X2), make_weights({1, 1}));
  REQUIRE(t.size() == 2);
  CHECK(t[0] == std::pair{Rational(2), M("x1^2 + x1*x2", X2)});
  CHECK(t[1] == std::pair{Rational(3), M("x2^3", X2)});

  std::mt19937 rng(23);
  WeightVector w = make_weights({Q("1/2"), 1, Q("5/3")});
  for (int i = 0; i < 40; ++i) {
    MPoly f = random_poly(rng, 3, 5, 8);
    MPoly sum(3);
    Rational last = -1;
    for (const auto& [wt, part] : graded_decompose(f, w)) {
      CHECK(wt > last);
      last = wt;
      CHECK(is_omega_homogeneous(part, w));
      CHECK(nu_omega(part, w) == wt);
      sum += part;
    }
    CHECK(sum == f);
  }
}

TEST_CASE("phi_substitute") {
  WeightVector w = certify_injective(make_weights({1, Q("3/2")}), 2);
  REQUIRE(w.injective_on_cap);
  PuiseuxSeries a = phi_substitute(TSeries(M("x1 + x2", X2), 2), w);
  CHECK(a.cap() == Q("5/2"));
  CHECK(a.terms().size() == 2);
  CHECK(a.coeff(1, 0) == 1);
  CHECK(a.coeff(Q("3/2"), 0) == 1);
  PuiseuxSeries b = phi_substitute(TSeries(M("x1*x2", X2), 2), w);
  CHECK(b.terms().size() == 1);
  CHECK(b.coeff(Q("5/2"), 0) == 1);

  WeightVector g = make_injective_weights(2, 2);
  PuiseuxSeries c = phi_substitute(TSeries(M("(1+x1)*(1+x2)", X2), 2), g);
  std::set<Rational> exps;
  for (const auto& [e, v] : c.terms()) exps.insert(e);
  CHECK(exps == std::set<Rational>{0, g.omega[0], g.omega[1], g.omega[0] + g.omega[1]});

  WeightVector collide = certify_injective(make_weights({1, 2}), 2);
  CHECK_FALSE(collide.injective_on_cap);
  CHECK_THROWS_AS(phi_substitute(TSeries(M("x1", X2), 2), collide), InputError);
}

TEST_CASE("make_injective_weights") {
  CHECK(make_injective_weights(1, 9).omega == std::vector<Rational>{1});
  WeightVector w = make_injective_weights(2, 3);
  CHECK(w.omega == std::vector<Rational>{1, Q("8/7")});
  for (auto [n, cap] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{3, 5}, std::pair{4, 3}}) {
    WeightVector v = make_injective_weights(n, cap);
    CHECK(v.injective_on_cap);
    std::set<Rational> seen;
    std::size_t count = 0;
    for_each_exponent(n, cap, [&](const Exponent& e) {
      seen.insert(weighted_degree(e, v.omega));
      ++count;
      CHECK(weighted_degree(e, v.omega) <= 2 * total_degree(e));
    });
    CHECK(seen.size() == count);
    for (const auto& o : v.omega) {
      CHECK(o >= 1);
      CHECK(o <= 2);
    }
  }
}

TEST_CASE("rescale_eisenstein") {
  CHECK(rescale_eisenstein(TSeries(M("1 + 1/2*x", X1), 3), 2) == TSeries(M("2 + 2*x", X1), 3));
  CHECK(rescale_eisenstein(TSeries(M("-5/128*x^4", X1), 4), 4) == TSeries(M("-40*x^4", X1), 4));
  CHECK(TSeries(M("1+x", X1), 1) * TSeries(M("1-x", X1), 1) == TSeries(M("1", X1), 1));
}

TEST_CASE("truncated ring axioms") {
  std::mt19937 rng(29);
  for (int i = 0; i < 60; ++i) {
    std::size_t n = 1 + i % 3;
    int cap = 1 + i % 8;
    TSeries f = random_series(rng, n, cap), g = random_series(rng, n, cap), h = random_series(rng, n, cap + 1);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f + g).cap() == cap);
    CHECK((f * h).cap() == cap);
    TSeries fh = f * h;
    for (const auto& [e, c] : fh.terms()) CHECK(total_degree(e) <= cap);
  }
  CHECK_THROWS_AS(TSeries(2, 3) + TSeries(3, 3), InputError);
}

TEST_CASE("series inverse") {
  std::mt19937 rng(31);
  for (int i = 0; i < 20; ++i) {
    TSeries f = random_series(rng, 2, 5);
    f.add_term(Exponent(2, 0), 3 - f.constant_term());
    CHECK(f * f.inverse() == TSeries(MPoly::constant(2, 1), 5));
  }
  CHECK_THROWS(TSeries(M("x", X1), 3).inverse());
}

TEST_CASE("phi is a ring morphism on truncations") {
  std::mt19937 rng(37);
  for (int i = 0; i < 20; ++i) {
    int cap = 4;
    WeightVector w = make_injective_weights(3, cap);
    TSeries f = random_series(rng, 3, cap), g = random_series(rng, 3, cap);
    PuiseuxSeries lhs = phi_substitute(f * g, w);
    PuiseuxSeries rhs = phi_substitute(f, w) * phi_substitute(g, w);
    // Images agree on every exponent the truncation determines.
    REQUIRE(lhs.cap());
    for_each_exponent(3, cap, [&](const Exponent& e) {
      Rational s = weighted_degree(e, w.omega);
      if (s <= *lhs.cap()) CHECK(lhs.coeff(s, 0) == rhs.coeff(s, 0));
    });
  }
}

TEST_CASE("rescale integrality matches the coefficientwise condition") {
  std::mt19937 rng(41);
  for (int i = 0; i < 80; ++i) {
    TSeries f = random_series(rng, 2, 4);
    for (long a : {1L, 2L, 3L, 6L}) {
      bool direct = true;
      for (const auto& [e, c] : f.terms())
        if (!is_integral(Rational(pow(Integer(a), total_degree(e) + 1)) * c)) direct = false;
      CHECK(has_integer_coefficients(rescale_eisenstein(f, a)) == direct);
    }
  }
}
