#include <algorithm>
#include <map>

#include "eisenbox/error.hpp"
#include "eisenbox/graded.hpp"

namespace eisenbox {

namespace {

// N / a^m for the fixed base a of one lift.
struct Frac {
  MPoly num;
  int m = 0;
};

using Series = std::map<Rational, Frac>;

class Lifter {
 public:
  Lifter(MPoly a) : a_(std::move(a)) { powers_.push_back(MPoly::constant(a_.nvars(), 1)); }

  const MPoly& power(int k) {
    while (static_cast<int>(powers_.size()) <= k) powers_.push_back(powers_.back() * a_);
    return powers_[k];
  }

  Frac add(const Frac& f, const Frac& g) {
    int m = std::max(f.m, g.m);
    return {f.num * power(m - f.m) + g.num * power(m - g.m), m};
  }

  Frac mul(const Frac& f, const Frac& g) { return {f.num * g.num, f.m + g.m}; }

  // Cancels factors of a while the quotient keeps integer coefficients.
  void reduce(Frac& f) {
    if (f.num.is_zero()) {
      f.m = 0;
      return;
    }
    while (f.m > 0) {
      auto q = f.num.exact_divide(a_);
      if (!q || q->denominator_lcm() != 1) break;
      f.num = std::move(*q);
      --f.m;
    }
  }

  void accumulate(Series& s, const Rational& weight, const Frac& f) {
    if (f.num.is_zero()) return;
    auto it = s.find(weight);
    if (it == s.end()) {
      s.emplace(weight, f);
      return;
    }
    it->second = add(it->second, f);
    if (it->second.num.is_zero()) s.erase(it);
  }

  Series mul(const Series& x, const Series& y, const Rational& limit) {
    Series r;
    for (const auto& [wx, fx] : x)
      for (const auto& [wy, fy] : y) {
        Rational w = wx + wy;
        if (w > limit) break;
        accumulate(r, w, mul(fx, fy));
      }
    return r;
  }

 private:
  MPoly a_;
  std::vector<MPoly> powers_;
};

Series polynomial_series(const MPoly& f, const WeightVector& w) {
  Series s;
  for (auto& [weight, part] : graded_decompose(f, w)) s.emplace(weight, Frac{part, 0});
  return s;
}

void check_integral_seed(const MPoly& seed) {
  if (seed.denominator_lcm() != 1)
    throw InputError("bad_seed", "graded seeds must have integer coefficients");
}

}  // namespace

MPoly GradedSeries::normalized_numerator(const Rational& weight) const {
  auto it = pieces.find(weight);
  if (it == pieces.end()) return MPoly(a.nvars());
  long slots = to_long(ceil(weight - lo)) + 1;
  long extra = base_power * slots - it->second.power;
  if (extra < 0) throw MathError("internal", "piece exceeds the reported denominator power");
  return it->second.numerator * a.pow(static_cast<unsigned>(extra));
}

GradedSeries graded_root_lift(const PolyInY& p, const WeightVector& w, const MPoly& seed,
                              const Rational& cap) {
  const std::size_t n = p.nvars();
  if (w.size() != n) throw InputError("bad_weights", "weight vector length differs from nvars");
  if (seed.nvars() != n) throw InputError("bad_seed", "seed lives in a different ring");
  if (cap < 0) throw InputError("bad_cap", "cap must be nonnegative");
  if (p.degree() < 1) throw InputError("no_y", "polynomial has degree 0 in y");
  check_integral_seed(seed);

  PolyInY p1 = p.integer_cleared().recentre(seed);
  const MPoly& c1 = p1.coeff(1);
  if (c1.is_zero()) throw NonSimpleRoot("dP/dy vanishes at the seed");

  GradedSeries g;
  g.omega = w;
  g.cap = cap;
  g.a = omega_initial(c1, w);
  g.e = nu_omega(c1, w);
  if (!is_omega_homogeneous(g.a, w)) throw MathError("internal", "denominator base not homogeneous");
  const Rational e = g.e;

  // The correction starts at weight s = ν_ω(c_0) - e. Its first term is
  // determined by a alone iff every y^i, i >= 2, lands above weight s + e.
  const MPoly& c0 = p1.coeff(0);
  if (!c0.is_zero()) {
    Rational s = nu_omega(c0, w) - e;
    if (s <= 0)
      throw SeedAccuracy("seed residual weight " + to_string(nu_omega(c0, w)) +
                         " does not exceed e = " + to_string(e));
    for (int i = 2; i <= p1.degree(); ++i) {
      const MPoly& ci = p1.coeff(i);
      if (!ci.is_zero() && nu_omega(ci, w) + (i - 1) * s <= e)
        throw SeedAccuracy("seed does not isolate a simple graded root: the y^" +
                           std::to_string(i) + " term reaches weight " +
                           to_string(Rational(nu_omega(ci, w) + i * s)));
    }
  }

  Lifter lift(g.a);
  std::vector<Series> coeffs;
  for (const auto& c : p1.coeffs()) coeffs.push_back(polynomial_series(c, w));

  const Rational limit = cap + e;
  Series corr;  // root of p1
  for (;;) {
    Series r = coeffs.back();
    for (int i = p1.degree() - 1; i >= 0; --i) {
      r = lift.mul(r, corr, limit);
      for (const auto& [wt, f] : coeffs[i])
        if (wt <= limit) lift.accumulate(r, wt, f);
    }
    if (r.empty()) break;
    const auto& [low, f] = *r.begin();
    Rational s = low - e;
    if (s > cap) break;
    if (!corr.empty() && s <= corr.rbegin()->first)
      throw MathError("internal", "graded recursion did not advance");
    Frac piece{-f.num, f.m + 1};
    lift.reduce(piece);
    corr.emplace(s, std::move(piece));
  }

  Series total = polynomial_series(seed, w);
  for (const auto& [wt, f] : corr) lift.accumulate(total, wt, f);
  for (auto& [wt, f] : total) {
    if (wt > cap) continue;
    lift.reduce(f);
    g.pieces.emplace(wt, GradedPiece{f.num, f.m});
  }

  g.lo = g.pieces.empty() ? Rational(0) : g.pieces.begin()->first;
  long k = 1;
  for (const auto& [wt, piece] : g.pieces) {
    long slots = to_long(ceil(wt - g.lo)) + 1;
    k = std::max(k, (piece.power + slots - 1) / slots);
  }
  g.base_power = static_cast<int>(k);
  return g;
}

GradedSeries graded_puiseux(const PolyInY& p, const WeightVector& w, int q, const MPoly& seed,
                            const Rational& cap) {
  if (q < 1) throw InputError("bad_ramification", "q must be a positive integer");
  if (w.size() != p.nvars()) throw InputError("bad_weights", "weight vector length differs from nvars");
  auto stretch = [q](const MPoly& f) {
    MPoly r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
      Exponent s = e;
      for (auto& v : s) v *= q;
      r.add_term(s, c);
    }
    return r;
  };
  std::vector<MPoly> coeffs;
  for (const auto& c : p.coeffs()) coeffs.push_back(stretch(c));
  std::vector<Rational> omega;
  for (const auto& o : w.omega) omega.push_back(o / q);
  GradedSeries g = graded_root_lift(PolyInY(p.nvars(), coeffs), make_weights(omega), seed, cap);
  g.ram = q;
  return g;
}

Rational completion_norm(const MPoly& f, const MPoly& g, const std::optional<WeightVector>& w) {
  if (f.is_zero() || g.is_zero()) throw InputError("zero_input", "completion_norm of zero");
  if (f.nvars() != g.nvars()) throw InputError("ring_mismatch", "f and g have different nvars");
  if (!w) return Rational(f.low_degree() - g.low_degree());
  if (w->size() != f.nvars()) throw InputError("bad_weights", "weight vector length differs from nvars");
  return nu_omega(f, *w) - nu_omega(g, *w);
}

}  // namespace eisenbox
