#include <algorithm>

#include "eisenbox/dfinite.hpp"
#include "eisenbox/error.hpp"

namespace eisenbox {

namespace {

// Element of Q(x), num/den with gcd 1 and monic den.
class RatFunc {
 public:
  RatFunc() : num_(), den_(UPoly::constant(1)) {}
  RatFunc(UPoly num) : num_(std::move(num)), den_(UPoly::constant(1)) {}
  RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw MathError("division_by_zero", "division by the zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  RatFunc derivative() const {
    return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw MathError("division_by_zero", "zero denominator");
    if (num_.is_zero()) {
      den_ = UPoly::constant(1);
      return;
    }
    UPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    Rational lead = den_.leading();
    num_ = (1 / lead) * num_;
    den_ = (1 / lead) * den_;
  }

  UPoly num_;
  UPoly den_;
};

// Polynomial in y over Q(x), index = degree.
using KPoly = std::vector<RatFunc>;

void trim(KPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

KPoly sub(KPoly a, const KPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
  trim(a);
  return a;
}

KPoly mul(const KPoly& a, const KPoly& b) {
  if (a.empty() || b.empty()) return {};
  KPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  trim(r);
  return r;
}

std::pair<KPoly, KPoly> divmod(KPoly a, const KPoly& b) {
  if (b.empty()) throw MathError("division_by_zero", "division by the zero polynomial");
  trim(a);
  KPoly q;
  if (a.size() >= b.size()) q.resize(a.size() - b.size() + 1);
  while (a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    RatFunc c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

// s with s*b = 1 mod m; throws when gcd(b, m) is not constant.
KPoly inverse_mod(const KPoly& b, const KPoly& m) {
  KPoly r0 = m, r1 = divmod(b, m).second;
  KPoly s0, s1{RatFunc(UPoly::constant(1))};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    KPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw NotSquarefree("P and dP/dy share a factor");
  KPoly inv{RatFunc(UPoly::constant(1)) / r0[0]};
  return divmod(mul(s0, inv), m).second;
}

UPoly to_upoly(const MPoly& f) {
  std::vector<Rational> c(std::max(f.degree(), 0) + 1);
  for (const auto& [e, v] : f.terms()) c[e[0]] = v;
  return UPoly(std::move(c));
}

KPoly to_kpoly(const PolyInY& p, bool dx) {
  KPoly r;
  for (const auto& c : p.coeffs()) {
    UPoly u = to_upoly(c);
    r.emplace_back(dx ? u.derivative() : u);
  }
  trim(r);
  return r;
}

KPoly derivative(const KPoly& e, const KPoly& y_prime, const KPoly& modulus) {
  KPoly direct, chain;
  for (std::size_t j = 0; j < e.size(); ++j) {
    direct.push_back(e[j].derivative());
    if (j > 0) chain.push_back(e[j] * RatFunc(UPoly::constant(static_cast<long>(j))));
  }
  trim(direct);
  trim(chain);
  KPoly r = direct;
  KPoly c = mul(chain, y_prime);
  if (r.size() < c.size()) r.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) r[i] = r[i] + c[i];
  trim(r);
  return divmod(r, modulus).second;
}

// Columns of polynomials; returns a nonzero kernel vector if one exists.
// Fraction-free: rows are combined by cross-multiplication and divided by
// the gcd of their entries.
std::optional<std::vector<UPoly>> polynomial_kernel(std::vector<std::vector<UPoly>> m,
                                                   std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      UPoly f = m[r][c], p = m[rank][c];
      UPoly g;
      for (std::size_t k = 0; k < cols; ++k) {
        m[r][k] = p * m[r][k] - f * m[rank][k];
        g = gcd(g, m[r][k]);
      }
      if (g.degree() > 0)
        for (auto& v : m[r]) v = divmod(v, g).first;
    }
    pivot_cols.push_back(c);
    ++rank;
  }
  if (rank < cols) {
    // Free column c; every pivot row then reads piv_i x_i + m_ic x_c = 0.
    std::size_t c = 0;
    while (std::find(pivot_cols.begin(), pivot_cols.end(), c) != pivot_cols.end()) ++c;
    std::vector<UPoly> k(cols);
    UPoly prod = UPoly::constant(1);
    for (std::size_t i = 0; i < rank; ++i) prod = prod * m[i][pivot_cols[i]];
    k[c] = prod;
    for (std::size_t i = 0; i < rank; ++i)
      k[pivot_cols[i]] = -(m[i][c] * divmod(prod, m[i][pivot_cols[i]]).first);
    return k;
  }
  return std::nullopt;
}

void check_seed(const PolyInY& p, const PuiseuxSeries& seed) {
  PuiseuxSeries d = evaluate(p.derivative_y(), seed);
  if (d.is_zero()) throw NonSimpleRoot("dP/dy vanishes at the seed");
  PuiseuxSeries r = evaluate(p, seed);
  if (!r.is_zero() && r.order() <= 2 * d.order())
    throw SeedAccuracy("seed residual order " + to_string(r.order()) +
                       " does not exceed 2*ord(dP/dy) = " + to_string(Rational(2 * d.order())));
}

}  // namespace

LinearODE algebraic_to_ode(const PolyInY& p, const PuiseuxSeries& seed) {
  if (p.nvars() != 1) throw InputError("not_univariate", "algebraic_to_ode needs one x variable");
  if (p.degree() < 1) throw InputError("no_y", "polynomial has degree 0 in y");
  if (!is_squarefree_in_y(p)) throw NotSquarefree("P is not squarefree in y");
  check_seed(p, seed);

  const KPoly modulus = to_kpoly(p, false);
  const std::size_t d = static_cast<std::size_t>(p.degree());
  // y' = -P_x / P_y in Q(x)[y]/(P).
  KPoly inv_py = inverse_mod(to_kpoly(p.derivative_y(), false), modulus);
  KPoly minus_px = mul(to_kpoly(p, true), KPoly{RatFunc(UPoly::constant(-1))});
  KPoly y_prime = divmod(mul(minus_px, inv_py), modulus).second;

  std::vector<KPoly> tower{divmod(KPoly{RatFunc(), RatFunc(UPoly::constant(1))}, modulus).second};
  std::vector<UPoly> scale;  // column k = scale[k] * tower[k]
  std::vector<std::vector<UPoly>> columns;
  auto push_column = [&](const KPoly& e) {
    UPoly l = UPoly::constant(1);
    for (const auto& c : e) l = divmod(l * c.den(), gcd(l, c.den())).first;
    std::vector<UPoly> col(d);
    for (std::size_t j = 0; j < e.size(); ++j) col[j] = e[j].num() * divmod(l, e[j].den()).first;
    scale.push_back(l);
    columns.push_back(col);
  };
  push_column(tower[0]);

  for (std::size_t order = 0; order <= d; ++order) {
    std::vector<std::vector<UPoly>> m(d, std::vector<UPoly>(columns.size()));
    for (std::size_t k = 0; k < columns.size(); ++k)
      for (std::size_t j = 0; j < d; ++j) m[j][k] = columns[k][j];
    if (auto kernel = polynomial_kernel(m, columns.size())) {
      std::vector<UPoly> a;
      for (std::size_t k = 0; k < kernel->size(); ++k) a.push_back((*kernel)[k] * scale[k]);
      while (!a.empty() && a.back().is_zero()) a.pop_back();
      UPoly g;
      for (const auto& c : a) g = gcd(g, c);
      for (auto& c : a) c = divmod(c, g).first;
      // Integer coefficients with content 1 and a positive leading term.
      Integer den = 1, content = 0;
      for (const auto& c : a)
        for (const auto& v : c.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
      for (auto& c : a) {
        c = Rational(den) * c;
        for (const auto& v : c.coeffs()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_num_mpz_t());
      }
      Rational k = make_rational(1, content);
      if (a.back().leading() < 0) k = -k;
      for (auto& c : a) c = k * c;
      return LinearODE{a};
    }
    if (order == d) break;
    tower.push_back(derivative(tower.back(), y_prime, modulus));
    push_column(tower.back());
  }
  throw MathError("internal", "no dependency among the first deg_y P + 1 derivatives");
}

}  // namespace eisenbox
