#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "eisenbox/error.hpp"
#include "eisenbox/graded.hpp"
#include "eisenbox/lp.hpp"

namespace eisenbox {

namespace {

using Point = std::vector<long>;
using Laurent = std::map<Point, Rational>;

struct Refinement {
  Point omega;  // ω' = ω_int + rank
  Point beta;   // ω'-initial exponent of a
  Rational lead;
};

Laurent multiply(const Laurent& u, const Laurent& v) {
  Laurent r;
  for (const auto& [eu, cu] : u)
    for (const auto& [ev, cv] : v) {
      Point e(eu.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = eu[i] + ev[i];
      Rational& slot = r[e];
      slot += cu * cv;
      if (slot == 0) r.erase(e);
    }
  return r;
}

Laurent from_mpoly(const MPoly& f) {
  Laurent r;
  for (const auto& [e, c] : f.terms()) r.emplace(Point(e.begin(), e.end()), c);
  return r;
}

long dot(const Point& u, const Point& v) {
  long s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

Refinement refine(const GradedSeries& g, const std::vector<std::size_t>& direction) {
  const std::size_t n = g.a.nvars();
  if (direction.size() != n) throw InputError("bad_direction", "direction must list every variable once");
  Point rank(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    if (direction[k] >= n || rank[direction[k]] != 0)
      throw InputError("bad_direction", "direction must list every variable once");
    rank[direction[k]] = static_cast<long>(k) + 1;
  }
  Integer l = 1;
  for (const auto& o : g.omega.omega) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), o.get_den_mpz_t());
  Refinement r;
  for (std::size_t i = 0; i < n; ++i)
    r.omega.push_back(to_long(Rational(g.omega.omega[i] * Rational(l)).get_num()) + rank[i]);

  std::optional<long> best;
  bool tie = false;
  for (const auto& [e, c] : g.a.terms()) {
    Point p(e.begin(), e.end());
    long v = dot(p, r.omega);
    if (!best || v < *best) {
      best = v;
      r.beta = p;
      r.lead = c;
      tie = false;
    } else if (v == *best) {
      tie = true;
    }
  }
  if (!best) throw InputError("zero_base", "denominator base is zero");
  if (tie)
    throw InputError("weight_tie",
                     "the refined weights tie on the initial form of a; perturb omega or "
                     "choose another direction");
  return r;
}

Point primitive(Point v) {
  long gcd = 0;
  for (long x : v) gcd = std::gcd(gcd, x);
  if (gcd > 1)
    for (long& x : v) x /= gcd;
  return v;
}

std::vector<std::vector<Rational>> as_columns(const std::vector<Point>& gens, std::size_t dim) {
  std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(gens.size()));
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t i = 0; i < dim; ++i) a[i][k] = gens[k][i];
  return a;
}

}  // namespace

bool Cone::contains(const std::vector<long>& p) const {
  if (p.size() != translate.size()) throw InputError("bad_point", "point has the wrong dimension");
  std::vector<Rational> rhs;
  for (std::size_t i = 0; i < p.size(); ++i) rhs.emplace_back(p[i] - translate[i]);
  if (generators.empty())
    return std::all_of(rhs.begin(), rhs.end(), [](const Rational& v) { return v == 0; });
  return lp_feasible(as_columns(generators, p.size()), rhs).has_value();
}

bool is_strongly_convex(const std::vector<std::vector<long>>& generators, std::size_t dim) {
  std::vector<Point> gens;
  for (const auto& g : generators) {
    if (g.size() != dim) throw InputError("bad_generator", "generator has the wrong dimension");
    if (std::any_of(g.begin(), g.end(), [](long v) { return v != 0; })) gens.push_back(g);
  }
  if (gens.empty()) return true;
  // A line exists iff 0 is a nontrivial nonnegative combination.
  auto a = as_columns(gens, dim);
  a.emplace_back(gens.size(), Rational(1));
  std::vector<Rational> rhs(dim, Rational(0));
  rhs.emplace_back(1);
  return !lp_feasible(a, rhs).has_value();
}

std::vector<std::vector<long>> laurent_support(const GradedSeries& g,
                                               const std::vector<std::size_t>& direction,
                                               int depth) {
  if (depth < 0) throw InputError("bad_depth", "expansion depth must be nonnegative");
  const std::size_t n = g.a.nvars();
  std::set<Point> support;
  bool need_expansion = std::any_of(g.pieces.begin(), g.pieces.end(),
                                    [](const auto& kv) { return kv.second.power > 0; });
  if (!need_expansion) {
    for (const auto& [w, piece] : g.pieces)
      for (const auto& [e, c] : piece.numerator.terms()) support.emplace(e.begin(), e.end());
    return {support.begin(), support.end()};
  }

  Refinement ref = refine(g, direction);
  // a = c x^β (1 + h)
  Laurent h;
  for (const auto& [e, c] : g.a.terms()) {
    Point p(e.begin(), e.end());
    if (p == ref.beta) continue;
    for (std::size_t i = 0; i < n; ++i) p[i] -= ref.beta[i];
    h.emplace(p, c / ref.lead);
  }
  std::vector<Laurent> h_powers{Laurent{{Point(n, 0), Rational(1)}}};
  for (int j = 1; j <= depth && !h.empty(); ++j) h_powers.push_back(multiply(h_powers.back(), h));

  std::map<int, Laurent> inverse_powers;  // truncated 1/a^m
  for (const auto& [w, piece] : g.pieces) {
    const int m = piece.power;
    auto it = inverse_powers.find(m);
    if (it == inverse_powers.end()) {
      Laurent inv;
      Integer binom = 1;  // (-1)^j C(m+j-1, j)
      for (std::size_t j = 0; j < h_powers.size(); ++j) {
        if (j > 0) binom = -binom * (m + static_cast<long>(j) - 1) / static_cast<long>(j);
        for (const auto& [e, c] : h_powers[j]) {
          Rational& slot = inv[e];
          slot += c * Rational(binom);
          if (slot == 0) inv.erase(e);
        }
      }
      Point shift(n);
      for (std::size_t i = 0; i < n; ++i) shift[i] = -m * ref.beta[i];
      Laurent scaled{{shift, 1 / pow(ref.lead, m)}};
      it = inverse_powers.emplace(m, multiply(inv, scaled)).first;
    }
    for (const auto& [e, c] : multiply(from_mpoly(piece.numerator), it->second)) support.insert(e);
  }
  return {support.begin(), support.end()};
}

Cone support_cone(const GradedSeries& g, const std::vector<std::size_t>& direction, int depth) {
  const std::size_t n = g.a.nvars();
  auto support = laurent_support(g, direction, depth);
  Cone cone;
  cone.strongly_convex = true;
  if (support.empty()) {
    cone.translate.assign(n, 0);
    return cone;
  }
  if (support.size() == 1) {
    cone.translate = support.front();
    return cone;
  }

  bool laurent = std::any_of(support.begin(), support.end(), [](const Point& p) {
    return std::any_of(p.begin(), p.end(), [](long v) { return v < 0; });
  });
  Refinement ref;
  if (laurent) {
    ref = refine(g, direction);
  } else {
    ref.omega.assign(n, 1);
    ref.beta.assign(n, 0);
  }

  // Smallest λ with s_i + λ⟨ω',s⟩β_i >= 0 for all s and i.
  Integer lo = 0;
  std::optional<Integer> hi;
  for (const auto& s : support) {
    long ws = dot(ref.omega, s);
    for (std::size_t i = 0; i < n; ++i) {
      long coef = ws * ref.beta[i];
      if (s[i] < 0) {
        if (coef <= 0)
          throw MathError("no_cone", "no psi_lambda maps the support into the orthant");
        lo = std::max(lo, ceil(make_rational(-s[i], coef)));
      } else if (coef < 0) {
        Integer bound = floor(make_rational(s[i], -coef));
        if (!hi || bound < *hi) hi = bound;
      }
    }
  }
  if (hi && lo > *hi) throw MathError("no_cone", "no psi_lambda maps the support into the orthant");
  const long lambda = to_long(lo);

  std::vector<Rational> omega(ref.omega.begin(), ref.omega.end());
  std::vector<Rational> beta(ref.beta.begin(), ref.beta.end());
  MonomialMap psi = psi_lambda(Rational(lambda), omega, beta);
  const long chi = to_long(psi.chi.get_num());

  for (std::size_t i = 0; i < n; ++i) {
    Point v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = (i == j ? chi : 0) - lambda * ref.omega[i] * ref.beta[j];
    cone.generators.push_back(primitive(v));
  }

  std::vector<Rational> mu;
  for (const auto& s : support) {
    auto image = psi.apply(std::vector<Rational>(s.begin(), s.end()));
    if (mu.empty()) {
      mu = image;
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) mu[i] = std::min(mu[i], image[i]);
  }
  auto corner = psi.apply_inverse(mu);
  Point gamma;
  for (const auto& c : corner) gamma.push_back(to_long(floor(c)));
  auto below = [&](const Point& p) {
    auto image = psi.apply(std::vector<Rational>(p.begin(), p.end()));
    for (std::size_t i = 0; i < n; ++i)
      if (image[i] > mu[i]) return false;
    return true;
  };
  while (!below(gamma))
    for (const auto& gen : cone.generators)
      for (std::size_t i = 0; i < n; ++i) gamma[i] -= gen[i];

  cone.translate = gamma;
  cone.lambda = lambda;
  cone.refined_omega = ref.omega;
  cone.beta = ref.beta;
  cone.strongly_convex = is_strongly_convex(cone.generators, n);
  return cone;
}

}  // namespace eisenbox
