#include "eisenbox/mpoly.hpp"

#include <algorithm>
#include <numeric>

#include "eisenbox/error.hpp"

namespace eisenbox {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
  MPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw InputError("bad_variable", "variable index out of range");
  Exponent e(nvars, 0);
  e[index] = 1;
  return monomial(std::move(e), 1);
}

MPoly MPoly::monomial(Exponent e, const Rational& c) {
  MPoly p(e.size());
  p.add_term(e, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational MPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw InputError("nvars_mismatch", "exponent length differs from nvars");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

int MPoly::low_degree() const {
  if (terms_.empty()) throw MathError("zero_polynomial", "order of the zero polynomial");
  return total_degree(terms_.begin()->first);
}

int MPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

static void check_same(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars())
    throw InputError("nvars_mismatch", "polynomials over different variable counts");
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  check_same(a, b);
  MPoly r(a.nvars());
  Exponent e(a.nvars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly result = constant(nvars_, 1);
  MPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    r.add_term(d, c * e[var]);
  }
  return r;
}

MPoly MPoly::truncated(int d) const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) > d) break;
    r.terms_.emplace_hint(r.terms_.end(), e, c);
  }
  return r;
}

MPoly MPoly::homogeneous_part(int d) const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == d) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

MPoly MPoly::substitute(std::size_t var, const MPoly& value) const {
  check_same(*this, value);
  // Group by the power of `var`, then Horner in `value`.
  std::map<int, MPoly> by_power;
  for (const auto& [e, c] : terms_) {
    Exponent rest = e;
    int k = rest[var];
    rest[var] = 0;
    auto [it, ins] = by_power.try_emplace(k, MPoly(nvars_));
    it->second.add_term(rest, c);
  }
  MPoly result(nvars_);
  int current = by_power.empty() ? 0 : by_power.rbegin()->first;
  for (auto it = by_power.rbegin(); it != by_power.rend(); ++it) {
    result = result * value.pow(static_cast<unsigned>(current - it->first));
    current = it->first;
    result += it->second;
  }
  return result * value.pow(static_cast<unsigned>(current));
}

MPoly MPoly::embed(std::size_t new_nvars, const std::vector<std::size_t>& slots) const {
  MPoly r(new_nvars);
  for (const auto& [e, c] : terms_) {
    Exponent f(new_nvars, 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[slots.at(i)] += e[i];
    r.add_term(f, c);
  }
  return r;
}

std::optional<MPoly> MPoly::exact_divide(const MPoly& divisor) const {
  check_same(*this, divisor);
  if (divisor.is_zero()) throw MathError("division_by_zero", "division by the zero polynomial");
  // Division by the grlex-leading term; the remainder is zero iff exact.
  const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
  MPoly rest = *this;
  MPoly quotient(nvars_);
  while (!rest.is_zero()) {
    const auto& [e, c] = *rest.terms_.rbegin();
    Exponent q(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      q[i] = e[i] - lead_e[i];
      if (q[i] < 0) return std::nullopt;
    }
    MPoly step = monomial(q, c / lead_c);
    quotient += step;
    rest -= step * divisor;
  }
  return quotient;
}

Integer MPoly::denominator_lcm() const {
  Integer l = 1;
  for (const auto& [e, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

std::vector<std::string> default_names(std::size_t nvars) {
  if (nvars == 1) return {"x"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::string monomial_string(const Exponent& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names.at(i);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::string to_string(const MPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    std::string mono = monomial_string(e, names);
    Rational mag = abs(c);
    std::string body;
    if (mono.empty()) {
      body = to_string(mag);
    } else if (mag == 1) {
      body = mono;
    } else {
      body = to_string(mag) + "*" + mono;
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + body;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace eisenbox
