#include "eisenbox/tseries.hpp"

#include <algorithm>

#include "eisenbox/error.hpp"

namespace eisenbox {

TSeries::TSeries(std::size_t nvars, int cap) : poly_(nvars), cap_(cap) {
  if (cap < 0) throw InputError("bad_cap", "negative truncation cap");
}

TSeries::TSeries(const MPoly& p, int cap) : poly_(p.truncated(cap)), cap_(cap) {
  if (cap < 0) throw InputError("bad_cap", "negative truncation cap");
}

Rational TSeries::constant_term() const { return poly_.coeff(Exponent(nvars(), 0)); }

void TSeries::add_term(const Exponent& e, const Rational& c) {
  if (total_degree(e) > cap_) return;
  poly_.add_term(e, c);
}

TSeries TSeries::operator-() const {
  TSeries r = *this;
  r.poly_ = -poly_;
  return r;
}

static void check_compatible(const TSeries& a, const TSeries& b) {
  if (a.nvars() != b.nvars())
    throw InputError("nvars_mismatch", "series over different variable counts");
}

TSeries operator+(const TSeries& a, const TSeries& b) {
  check_compatible(a, b);
  int cap = std::min(a.cap_, b.cap_);
  TSeries r(a.nvars(), cap);
  r.poly_ = a.poly_.truncated(cap) + b.poly_.truncated(cap);
  return r;
}

TSeries operator-(const TSeries& a, const TSeries& b) { return a + (-b); }

TSeries operator*(const TSeries& a, const TSeries& b) {
  check_compatible(a, b);
  int cap = std::min(a.cap_, b.cap_);
  TSeries r(a.nvars(), cap);
  Exponent e(a.nvars());
  for (const auto& [ea, ca] : a.terms()) {
    int da = total_degree(ea);
    if (da > cap) break;
    for (const auto& [eb, cb] : b.terms()) {
      if (da + total_degree(eb) > cap) break;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.poly_.add_term(e, ca * cb);
    }
  }
  return r;
}

TSeries operator*(const Rational& c, const TSeries& a) {
  TSeries r = a;
  r.poly_ *= c;
  return r;
}

TSeries TSeries::truncated(int cap) const {
  if (cap > cap_) throw InputError("bad_cap", "cannot raise the truncation cap");
  return TSeries(poly_, cap);
}

TSeries TSeries::inverse() const {
  Rational c0 = constant_term();
  if (c0 == 0) throw MathError("not_a_unit", "series with zero constant term is not invertible");
  // 1/(c0 (1 + h)) = (1/c0) Σ (-h)^k, h without constant term, k <= cap.
  TSeries h = (1 / c0) * *this;
  h.add_term(Exponent(nvars(), 0), -1);
  TSeries neg_h = -h;
  TSeries sum(poly_.nvars(), cap_);
  sum.add_term(Exponent(nvars(), 0), 1);
  TSeries power = sum;
  for (int k = 1; k <= cap_; ++k) {
    power = power * neg_h;
    if (power.is_zero()) break;
    sum = sum + power;
  }
  return (1 / c0) * sum;
}

std::pair<int, MPoly> TSeries::ord_in() const {
  if (poly_.is_zero())
    throw MathError("zero_to_cap", "series vanishes up to its cap " + std::to_string(cap_));
  int d = poly_.low_degree();
  return {d, poly_.homogeneous_part(d)};
}

TSeries substitute_univariate(const TSeries& f, const std::vector<Rational>& scales) {
  if (scales.size() != f.nvars()) throw InputError("nvars_mismatch", "one scale per variable");
  TSeries r(f.nvars(), f.cap());
  for (const auto& [e, c] : f.terms()) {
    Rational factor = c;
    for (std::size_t i = 0; i < e.size(); ++i) factor *= pow(scales[i], e[i]);
    r.add_term(e, factor);
  }
  return r;
}

TSeries rescale_eisenstein(const TSeries& f, const Integer& a) {
  TSeries r(f.nvars(), f.cap());
  for (const auto& [e, c] : f.terms())
    r.add_term(e, c * Rational(pow(a, static_cast<unsigned long>(total_degree(e) + 1))));
  return r;
}

bool has_integer_coefficients(const TSeries& f) {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [](const auto& t) { return is_integral(t.second); });
}

}  // namespace eisenbox
