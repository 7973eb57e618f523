#include <doctest.h>

#include "eisenbox/error.hpp"
#include "eisenbox/graded.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const std::vector<std::string> X1{"x1"};
const std::vector<std::string> X2{"x1", "x2"};

const char* kDemo = "(x1+x2)*y^2 + (x1+x2)*y - x1^2";

// (-1 + sqrt(1 + 4z)) / 2 = Σ_{ℓ>=1} binom(1/2, ℓ) 4^ℓ z^ℓ / 2.
Rational quadratic_root_coeff(long l) { return binom(Q("1/2"), l) * Rational(pow(Integer(4), static_cast<unsigned long>(l))) / 2; }

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix r(a.size(), std::vector<Rational>(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

RationalMatrix identity(std::size_t n) {
  RationalMatrix r(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

// ν_ω(P(x, S / a^K)) from a^{dK} P(S / a^K) = Σ c_i S^i a^{K(d-i)}.
Rational residual_weight(const PolyInY& p, const MPoly& S, const MPoly& a, int K, const WeightVector& w) {
  const int d = p.degree();
  MPoly total(a.nvars());
  for (int i = 0; i <= d; ++i) total += p.coeff(i) * S.pow(i) * a.pow(K * (d - i));
  if (total.is_zero()) return Rational(1000000);
  return nu_omega(total, w) - Rational(d * K) * nu_omega(a, w);
}

std::string error_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("graded lift of the demo polynomial") {
  PolyInY p = P(kDemo);
  WeightVector w = make_weights({1, 1});
  GradedSeries g = graded_root_lift(p, w, MPoly(2), 12);
  CHECK(g.a == M("x1 + x2", X2));
  CHECK(g.e == 1);
  CHECK(g.lo == 1);
  REQUIRE(g.pieces.size() == 12);
  for (long l = 1; l <= 12; ++l) {
    const GradedPiece& piece = g.pieces.at(l);
    CHECK(piece.power == l);
    Exponent e{static_cast<int>(2 * l), 0};
    CHECK(piece.numerator == MPoly::monomial(e, quadratic_root_coeff(l)));
    CHECK(quadratic_root_coeff(l) == Rational(catalan(l - 1)) * (l % 2 ? 1 : -1));
    // Denominator-exponent law and exact weight.
    CHECK(piece.power <= ceil(Rational(l) - g.lo) + 1);
    CHECK(is_omega_homogeneous(piece.numerator, w));
    CHECK(nu_omega(piece.numerator, w) - piece.power * nu_omega(g.a, w) == l);
  }
}

TEST_CASE("graded residual law") {
  PolyInY p = P(kDemo);
  WeightVector w = make_weights({1, 1});
  GradedSeries g = graded_root_lift(p, w, MPoly(2), 8);
  int K = 0;
  for (const auto& [l, piece] : g.pieces) K = std::max(K, piece.power);
  MPoly S(2);
  for (const auto& [l, piece] : g.pieces) {
    S += piece.numerator * g.a.pow(K - piece.power);
    CHECK(residual_weight(p, S, g.a, K, w) > l + g.e);
  }
}

TEST_CASE("normalized numerators") {
  GradedSeries g = graded_root_lift(P(kDemo), make_weights({1, 1}), MPoly(2), 5);
  CHECK(g.base_power == 1);
  for (const auto& [l, piece] : g.pieces) {
    MPoly b = g.normalized_numerator(l);
    int power = g.base_power * (static_cast<int>(to_long(ceil(l - g.lo))) + 1);
    // b / a^power = numerator / a^m
    CHECK(b == piece.numerator * g.a.pow(power - piece.power));
  }
}

TEST_CASE("graded lift small cases") {
  GradedSeries lin = graded_root_lift(P("(x1+x2)*y - x1^2"), make_weights({1, 1}), MPoly(2), 6);
  REQUIRE(lin.pieces.size() == 1);
  CHECK(lin.pieces.at(1) == GradedPiece{M("x1^2", X2), 1});

  // One variable: reproduces the univariate expansion with a = 2.
  GradedSeries sq = graded_root_lift(P("y^2 - (1+x1)"), make_weights({1}), MPoly::constant(1, 1), 10);
  CHECK(sq.a == MPoly::constant(1, 2));
  std::vector<Rational> oracle = sqrt_coeffs(10);
  for (long l = 1; l <= 10; ++l) {
    const GradedPiece& piece = sq.pieces.at(l);
    Rational value = piece.numerator.coeff({static_cast<int>(l)}) / Rational(pow(Integer(2), piece.power));
    CHECK(value == oracle[l]);
  }
  CHECK(sq.pieces.at(0).numerator == MPoly::constant(1, 1));
}

TEST_CASE("graded lift errors") {
  CHECK_THROWS_AS(graded_root_lift(P("y^2 - x1*x2"), make_weights({1, 1}), MPoly(2), 4), NonSimpleRoot);
  CHECK(error_code([] { graded_root_lift(P(kDemo), make_weights({1, 1, 1}), MPoly(2), 4); }) == "bad_weights");
  CHECK(error_code([] { graded_root_lift(P(kDemo), make_weights({1, 1}), M("1/2", X2), 4); }) == "bad_seed");
}

TEST_CASE("graded_puiseux") {
  GradedSeries a = graded_puiseux(P("y^2 - x1^3"), make_weights({1}), 2, M("x1^3", X1), 6);
  CHECK(a.ram == 2);
  REQUIRE(a.pieces.size() == 1);
  CHECK(a.pieces.begin()->first == Q("3/2"));
  CHECK(a.pieces.begin()->second.numerator == M("x1^3", X1));

  GradedSeries b = graded_puiseux(P("y^2 - x1*x2"), make_weights({1, 1}), 2, M("-x1*x2", X2), 4);
  REQUIRE(b.pieces.size() == 1);
  CHECK(b.pieces.begin()->first == 1);
  CHECK(b.pieces.begin()->second.numerator == M("-x1*x2", X2));

  GradedSeries same = graded_puiseux(P(kDemo), make_weights({1, 1}), 1, MPoly(2), 5);
  CHECK(same == graded_root_lift(P(kDemo), make_weights({1, 1}), MPoly(2), 5));
  CHECK_THROWS(graded_puiseux(P(kDemo), make_weights({1, 1}), 0, MPoly(2), 5));
}

TEST_CASE("psi_lambda examples") {
  MonomialMap m = psi_lambda(1, {1, 2}, {1, 1});
  CHECK(m.matrix == RationalMatrix{{2, 1}, {2, 3}});
  CHECK(determinant(m.matrix) == 4);
  CHECK(m.chi == 4);
  MonomialMap id = psi_lambda(0, {1, 2}, {1, 1});
  CHECK(id.matrix == identity(2));
  CHECK(id.chi == 1);
  MonomialMap k = psi_lambda(3, {1, 2}, {2, 1});
  CHECK(multiply(k.matrix, k.inverse) == identity(2));
  CHECK(error_code([] { psi_lambda(1, {1, 1}, {-1, 0}); }) == "singular_map");
  CHECK_THROWS_AS(matrix_inverse({{1, 2}, {2, 4}}), MathError);
}

TEST_CASE("chi law on random maps") {
  std::mt19937 rng(59);
  std::uniform_int_distribution<int> dim(1, 4), small(0, 5), lam(0, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = dim(rng);
    std::vector<Rational> omega, beta;
    for (std::size_t i = 0; i < n; ++i) {
      omega.push_back(make_rational(1 + small(rng), 1 + small(rng)));
      beta.push_back(small(rng));
    }
    Rational lambda = make_rational(lam(rng), 1 + small(rng) % 2);
    MonomialMap m = psi_lambda(lambda, omega, beta);
    Rational dot = 0;
    for (std::size_t i = 0; i < n; ++i) dot += beta[i] * omega[i];
    CHECK(m.chi == 1 + lambda * dot);
    CHECK(cofactor_det(m.matrix) == m.chi);
    CHECK(determinant(m.matrix) == m.chi);
    CHECK(m.inverse == matrix_inverse(m.matrix));
    CHECK(multiply(m.matrix, m.inverse) == identity(n));

    // x^α ↦ x^{αM}, and the map of a product is the product of the maps.
    std::vector<Rational> a, b, ab;
    for (std::size_t i = 0; i < n; ++i) {
      a.push_back(small(rng));
      b.push_back(small(rng));
      ab.push_back(a[i] + b[i]);
    }
    std::vector<Rational> row(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) row[j] += a[i] * m.matrix[i][j];
    CHECK(m.apply(a) == row);
    std::vector<Rational> sum(n);
    for (std::size_t i = 0; i < n; ++i) sum[i] = m.apply(a)[i] + m.apply(b)[i];
    CHECK(m.apply(ab) == sum);
    CHECK(m.apply_inverse(m.apply(a)) == a);
  }
}

TEST_CASE("strong convexity") {
  CHECK(is_strongly_convex({{1, 0}, {0, 1}}, 2));
  CHECK(is_strongly_convex({{1, 0}, {-1, 1}}, 2));
  CHECK_FALSE(is_strongly_convex({{1, 0}, {-1, 0}}, 2));
  CHECK_FALSE(is_strongly_convex({{1, 1}, {-1, -1}, {0, 1}}, 2));
  CHECK_FALSE(is_strongly_convex({{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}}, 3));
  CHECK(is_strongly_convex({}, 3));
}

TEST_CASE("support cone of the demo") {
  GradedSeries g = graded_root_lift(P(kDemo), make_weights({1, 1}), MPoly(2), 12);
  Cone c = support_cone(g, {0, 1}, 6);
  CHECK(c.strongly_convex);
  CHECK(is_strongly_convex(c.generators, 2));
  for (const auto& s : laurent_support(g, {0, 1}, 6)) CHECK(c.contains(s));
  // The full support is {(k - j, j) : k >= 1, j >= 0}.
  for (long k = 1; k <= 12; ++k)
    for (long j = 0; j <= 40; ++j) CHECK(c.contains({k - j, j}));
  CHECK_FALSE(c.contains({-1, 0}));
  CHECK_FALSE(c.contains({0, -1}));
}

TEST_CASE("support cone special cases") {
  GradedSeries poly = graded_root_lift(P("y - x1^2 - x2"), make_weights({1, 1}), MPoly(2), 4);
  Cone c = support_cone(poly, {0, 1}, 3);
  CHECK(c.translate == std::vector<long>{0, 0});
  CHECK(c.lambda == 0);
  CHECK(c.strongly_convex);
  for (long i = 0; i <= 5; ++i)
    for (long j = 0; j <= 5; ++j) CHECK(c.contains({i, j}));
  CHECK_FALSE(c.contains({-1, 2}));

  GradedSeries single = graded_root_lift(P("x2*y - x1^2"), make_weights({1, 1}), MPoly(2), 4);
  Cone s = support_cone(single, {0, 1}, 3);
  CHECK(s.translate == std::vector<long>{2, -1});
  CHECK(s.generators.empty());
  CHECK(s.contains({2, -1}));
  CHECK_FALSE(s.contains({3, -1}));

  GradedSeries tie = graded_root_lift(P("(x1^2 + x2)*y - x1^3"), make_weights({1, 2}), MPoly(2), 4);
  CHECK(error_code([&] { support_cone(tie, {0, 1}, 3); }) == "weight_tie");
  CHECK(error_code([&] { support_cone(single, {0}, 3); }) == "bad_direction");
  CHECK(error_code([&] { support_cone(single, {1, 1}, 3); }) == "bad_direction");
}

TEST_CASE("cone membership against Cramer's rule") {
  std::mt19937 rng(61);
  std::uniform_int_distribution<long> v(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<long> g1{v(rng), v(rng)}, g2{v(rng), v(rng)}, gamma{v(rng), v(rng)};
    long det = g1[0] * g2[1] - g1[1] * g2[0];
    if (det == 0) continue;
    Cone c{{g1, g2}, gamma, true, 0, {}, {}};
    for (long x = -6; x <= 6; ++x)
      for (long y = -6; y <= 6; ++y) {
        long px = x - gamma[0], py = y - gamma[1];
        Rational s = make_rational(px * g2[1] - py * g2[0], det);
        Rational t = make_rational(g1[0] * py - g1[1] * px, det);
        CHECK(c.contains({x, y}) == (s >= 0 && t >= 0));
      }
  }
}

TEST_CASE("completion_norm") {
  CHECK(completion_norm(M("x1^2", X2), M("x1", X2)) == 1);
  CHECK(completion_norm(M("x1", X2), M("x2^2", X2), make_weights({1, 1})) == -1);
  CHECK(completion_norm(M("x1*x2^2", X2), M("x1 + x2", X2), make_weights({2, 1})) == 3);
  CHECK_THROWS_AS(completion_norm(MPoly(2), M("x1", X2)), InputError);
}
