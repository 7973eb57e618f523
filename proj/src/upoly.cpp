#include "eisenbox/upoly.hpp"

#include <algorithm>

#include "eisenbox/error.hpp"

namespace eisenbox {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly({c}); }
UPoly UPoly::x() { return UPoly({0, 1}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
  return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
}

Rational UPoly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational UPoly::operator()(const Rational& at) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * at + *it;
  return r;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) + b.coeff(int(i));
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UPoly operator*(const Rational& k, const UPoly& a) {
  UPoly r = a;
  for (auto& c : r.c_) c *= k;
  r.trim();
  return r;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return (1 / leading()) * *this;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return *this;
  Integer den = 1, num = 0;
  for (const auto& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Rational> scaled;
  for (const auto& c : c_) {
    scaled.push_back(c * Rational(den));
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), scaled.back().get_num_mpz_t());
  }
  Rational k = make_rational(1, num);
  if (scaled.back() < 0) k = -k;
  for (auto& c : scaled) c *= k;
  return UPoly(std::move(scaled));
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    Rational mag = abs(c);
    std::string body = mono.empty() ? eisenbox::to_string(mag)
                       : mag == 1   ? mono
                                    : eisenbox::to_string(mag) + "*" + mono;
    if (out.empty())
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
  }
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw MathError("division_by_zero", "polynomial division by zero");
  std::vector<Rational> q(std::max(0, a.degree() - b.degree() + 1));
  std::vector<Rational> r = a.coeffs();
  Rational lead = b.leading();
  for (int i = a.degree(); i >= b.degree(); --i) {
    Rational k = r[i] / lead;
    if (k == 0) continue;
    q[i - b.degree()] = k;
    for (int j = 0; j <= b.degree(); ++j) r[i - b.degree() + j] -= k * b.coeffs()[j];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{1};
  for (const auto& f : factorize(abs(n)).factors) {
    std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned long k = 1; k <= f.multiplicity; ++k) {
      pk *= f.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

RationalRootSplit rational_roots(const UPoly& p) {
  if (p.is_zero()) throw MathError("zero_polynomial", "roots of the zero polynomial");
  RationalRootSplit out;
  UPoly rest = p.primitive();
  auto strip = [&rest](const Rational& r) {
    UPoly lin({-r, 1});
    int m = 0;
    while (rest.degree() >= 1) {
      auto [q, rem] = divmod(rest, lin);
      if (!rem.is_zero()) break;
      rest = q.primitive();
      ++m;
    }
    return m;
  };
  if (int m = strip(0); m > 0) out.roots.push_back({0, m});
  if (rest.degree() >= 1) {
    std::vector<Rational> candidates;
    auto num_div = divisors(rest.coeffs().front().get_num());
    auto den_div = divisors(rest.leading().get_num());
    for (const auto& a : num_div)
      for (const auto& b : den_div) {
        candidates.push_back(make_rational(a, b));
        candidates.push_back(-make_rational(a, b));
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      if (rest.degree() < 1) break;
      if (rest(r) != 0) continue;
      out.roots.push_back({r, strip(r)});
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  out.cofactor = rest;
  return out;
}

std::vector<Integer> integer_roots(const UPoly& p) {
  std::vector<Integer> out;
  if (p.is_zero()) return out;
  for (const auto& r : rational_roots(p).roots)
    if (is_integral(r.value)) out.push_back(r.value.get_num());
  return out;
}

}  // namespace eisenbox
