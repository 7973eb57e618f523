#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "eisenbox/error.hpp"
#include "eisenbox/frontend.hpp"

namespace eisenbox {

namespace {

constexpr unsigned kMaxExponent = 100000;

enum class Tok { Num, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

[[noreturn]] void fail(const std::string& code, const std::string& what, std::size_t pos) {
  throw InputError(code, what + " at position " + std::to_string(pos));
}

std::vector<Token> tokenize(std::string_view s, bool primes) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(c)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Num, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(c)) {
      while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
      while (primes && i < s.size() && s[i] == '\'') ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (s.substr(i, 3) == "\xE2\x88\x92") {  // U+2212 minus sign
      out.push_back({Tok::Minus, "-", start});
      i += 3;
      continue;
    }
    if (s.substr(i, 2) == "\xC2\xB7") {  // U+00B7 middle dot
      out.push_back({Tok::Star, "*", start});
      i += 2;
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case '/': k = Tok::Slash; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default: fail("syntax_error", std::string("unexpected character '") + s[i] + "'", start);
    }
    out.push_back({k, std::string(1, s[i]), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

bool is_poly_variable(const std::string& name) {
  if (name == "x" || name == "y" || name == "t") return true;
  if (name.size() < 2 || name[0] != 'x' || name[1] == '0') return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
}

bool is_ode_variable(const std::string& name) {
  if (name == "x") return true;
  if (name.empty() || name[0] != 'f') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char ch) { return ch == '\''; });
}

class Parser {
 public:
  Parser(std::string_view text, bool ode) : toks_(tokenize(text, ode)), ode_(ode) {}

  std::unique_ptr<ExprAST> parse() {
    auto e = expr();
    if (peek().kind != Tok::End) {
      if (peek().kind == Tok::RParen) fail("syntax_error", "unbalanced ')'", peek().pos);
      fail("syntax_error", "expected operator, found '" + peek().text + "'", peek().pos);
    }
    return e;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }

  static std::unique_ptr<ExprAST> node(ExprAST::Kind k, std::size_t pos) {
    auto n = std::make_unique<ExprAST>();
    n->kind = k;
    n->pos = pos;
    return n;
  }

  std::unique_ptr<ExprAST> expr() {
    std::unique_ptr<ExprAST> lhs;
    if (peek().kind == Tok::Minus) {
      std::size_t pos = next().pos;
      lhs = node(ExprAST::Kind::Neg, pos);
      lhs->children.push_back(term());
    } else {
      lhs = term();
    }
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = next();
      auto n = node(op.kind == Tok::Plus ? ExprAST::Kind::Add : ExprAST::Kind::Sub, op.pos);
      n->children.push_back(std::move(lhs));
      n->children.push_back(term());
      lhs = std::move(n);
    }
    return lhs;
  }

  std::unique_ptr<ExprAST> term() {
    auto lhs = factor();
    while (peek().kind == Tok::Star) {
      std::size_t pos = next().pos;
      auto n = node(ExprAST::Kind::Mul, pos);
      n->children.push_back(std::move(lhs));
      n->children.push_back(factor());
      lhs = std::move(n);
    }
    if (peek().kind == Tok::Slash)
      fail("syntax_error", "division is only allowed inside a rational literal a/b", peek().pos);
    return lhs;
  }

  std::unique_ptr<ExprAST> factor() {
    auto b = base();
    if (peek().kind != Tok::Caret) return b;
    std::size_t pos = next().pos;
    auto n = node(ExprAST::Kind::Pow, pos);
    n->exponent = exponent();
    n->children.push_back(std::move(b));
    return n;
  }

  unsigned exponent() {
    const Token& t = peek();
    if (t.kind == Tok::Minus) fail("negative_exponent", "negative exponent", t.pos);
    if (t.kind == Tok::Num) {
      next();
      if (peek().kind == Tok::Slash) fail("fractional_exponent", "fractional exponent", t.pos);
      return checked_exponent(Integer(t.text), t.pos);
    }
    if (t.kind == Tok::LParen) {
      // Only to give precise errors for x^(1/2) and x^(-1).
      next();
      bool neg = false;
      if (peek().kind == Tok::Minus) {
        neg = true;
        next();
      }
      if (peek().kind != Tok::Num) fail("syntax_error", "expected exponent", peek().pos);
      Integer num(next().text);
      Integer den = 1;
      if (peek().kind == Tok::Slash) {
        next();
        if (peek().kind != Tok::Num) fail("syntax_error", "expected denominator", peek().pos);
        den = Integer(next().text);
      }
      if (peek().kind != Tok::RParen) fail("syntax_error", "expected ')'", peek().pos);
      next();
      Rational q = make_rational(num, den);
      if (neg && q != 0) fail("negative_exponent", "negative exponent", t.pos);
      if (!is_integral(q)) fail("fractional_exponent", "fractional exponent", t.pos);
      return checked_exponent(q.get_num(), t.pos);
    }
    fail("syntax_error", "expected exponent", t.pos);
  }

  static unsigned checked_exponent(const Integer& n, std::size_t pos) {
    if (n > kMaxExponent) fail("exponent_too_large", "exponent exceeds 100000", pos);
    return static_cast<unsigned>(n.get_ui());
  }

  std::unique_ptr<ExprAST> base() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Num: {
        auto n = node(ExprAST::Kind::Literal, t.pos);
        Integer num(t.text);
        Integer den = 1;
        if (peek().kind == Tok::Slash) {
          next();
          if (peek().kind != Tok::Num)
            fail("syntax_error", "expected a natural number after '/'", peek().pos);
          const Token& d = next();
          den = Integer(d.text);
          if (den == 0) fail("division_by_zero", "zero denominator", d.pos);
        }
        n->value = make_rational(num, den);
        return n;
      }
      case Tok::Ident: {
        bool ok = ode_ ? is_ode_variable(t.text) : is_poly_variable(t.text);
        if (!ok) fail("unknown_variable", "unknown variable '" + t.text + "'", t.pos);
        auto n = node(ExprAST::Kind::Variable, t.pos);
        n->name = t.text;
        return n;
      }
      case Tok::LParen: {
        auto e = expr();
        if (peek().kind != Tok::RParen) fail("syntax_error", "expected ')'", peek().pos);
        next();
        return e;
      }
      case Tok::End: fail("syntax_error", "unexpected end of input", t.pos);
      default: fail("syntax_error", "unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  bool ode_;
};

void collect(const ExprAST& n, std::map<std::string, std::size_t>& seen) {
  if (n.kind == ExprAST::Kind::Variable) seen.try_emplace(n.name, n.pos);
  for (const auto& c : n.children) collect(*c, seen);
}

MPoly evaluate(const ExprAST& n, const std::map<std::string, std::size_t>& index,
               std::size_t nvars) {
  switch (n.kind) {
    case ExprAST::Kind::Literal: return MPoly::constant(nvars, n.value);
    case ExprAST::Kind::Variable: {
      auto it = index.find(n.name);
      if (it == index.end()) fail("unknown_variable", "unknown variable '" + n.name + "'", n.pos);
      return MPoly::variable(nvars, it->second);
    }
    case ExprAST::Kind::Neg: return -evaluate(*n.children[0], index, nvars);
    case ExprAST::Kind::Add:
      return evaluate(*n.children[0], index, nvars) + evaluate(*n.children[1], index, nvars);
    case ExprAST::Kind::Sub:
      return evaluate(*n.children[0], index, nvars) - evaluate(*n.children[1], index, nvars);
    case ExprAST::Kind::Mul:
      return evaluate(*n.children[0], index, nvars) * evaluate(*n.children[1], index, nvars);
    case ExprAST::Kind::Pow: return evaluate(*n.children[0], index, nvars).pow(n.exponent);
  }
  return MPoly(nvars);
}

std::map<std::string, std::size_t> index_of(const std::vector<std::string>& names) {
  std::map<std::string, std::size_t> m;
  for (std::size_t i = 0; i < names.size(); ++i) m.emplace(names[i], i);
  return m;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::unique_ptr<ExprAST> parse_expr(std::string_view text) { return Parser(text, false).parse(); }

std::vector<std::string> collect_variables(const ExprAST& ast) {
  std::map<std::string, std::size_t> seen;
  collect(ast, seen);
  std::optional<std::size_t> plain_x, indexed_x;
  int max_index = 0;
  for (const auto& [name, pos] : seen) {
    if (name == "x") {
      plain_x = pos;
    } else if (name[0] == 'x') {
      if (name.size() > 4) fail("too_many_variables", "variable index too large", pos);
      max_index = std::max(max_index, std::stoi(name.substr(1)));
      indexed_x = indexed_x ? std::min(*indexed_x, pos) : pos;
    }
  }
  if (plain_x && indexed_x)
    fail("inconsistent_variables", "'x' cannot be mixed with indexed variables",
         std::max(*plain_x, *indexed_x));
  std::vector<std::string> names;
  if (plain_x) names.push_back("x");
  for (int i = 1; i <= max_index; ++i) names.push_back("x" + std::to_string(i));
  if (seen.count("t")) names.push_back("t");
  if (seen.count("y")) names.push_back("y");
  return names;
}

ParsedPoly parse_poly(std::string_view text,
                      const std::optional<std::vector<std::string>>& expected_vars) {
  auto ast = parse_expr(text);
  std::vector<std::string> names = expected_vars ? *expected_vars : collect_variables(*ast);
  if (expected_vars) {
    std::map<std::string, std::size_t> seen;
    collect(*ast, seen);
    auto idx = index_of(names);
    for (const auto& [name, pos] : seen)
      if (!idx.count(name)) fail("unknown_variable", "unexpected variable '" + name + "'", pos);
  }
  MPoly p = evaluate(*ast, index_of(names), names.size());
  return {std::move(p), std::move(names)};
}

ParsedPoly parse_poly_in_y(std::string_view text) {
  auto ast = parse_expr(text);
  std::vector<std::string> names = collect_variables(*ast);
  if (names.empty() || names.back() != "y") names.push_back("y");
  if (names.size() == 1 || (names.size() == 2 && names[0] == "t")) names.insert(names.begin(), "x");
  MPoly p = evaluate(*ast, index_of(names), names.size());
  return {std::move(p), std::move(names)};
}

LinearODE parse_ode(std::string_view text) {
  std::string_view lhs = text;
  if (auto eq = text.find('='); eq != std::string_view::npos) {
    std::string_view rhs = trim(text.substr(eq + 1));
    if (rhs != "0") fail("syntax_error", "an ODE must have the form '... = 0'", eq);
    lhs = text.substr(0, eq);
  }
  auto ast = Parser(lhs, true).parse();
  std::map<std::string, std::size_t> seen;
  collect(*ast, seen);
  std::size_t order = 0;
  bool has_f = false;
  for (const auto& [name, pos] : seen)
    if (name[0] == 'f') {
      has_f = true;
      order = std::max(order, name.size() - 1);
    }
  if (!has_f) fail("not_an_ode", "the equation does not mention f", 0);

  // Variables: x, then f, f', ..., f^(order).
  std::vector<std::string> names{"x"};
  for (std::size_t k = 0; k <= order; ++k) names.push_back("f" + std::string(k, '\''));
  MPoly p = evaluate(*ast, index_of(names), names.size());

  std::vector<std::vector<Rational>> coeffs(order + 1);
  for (const auto& [e, c] : p.terms()) {
    int fdeg = 0;
    std::size_t which = 0;
    for (std::size_t k = 0; k <= order; ++k)
      if (e[k + 1] != 0) {
        fdeg += e[k + 1];
        which = k;
      }
    if (fdeg != 1) fail("not_linear", "the ODE must be linear and homogeneous in f", 0);
    auto& a = coeffs[which];
    if (a.size() <= static_cast<std::size_t>(e[0])) a.resize(e[0] + 1);
    a[e[0]] += c;
  }
  LinearODE ode;
  for (auto& a : coeffs) ode.coeffs.emplace_back(std::move(a));
  while (!ode.coeffs.empty() && ode.coeffs.back().is_zero()) ode.coeffs.pop_back();
  if (ode.coeffs.empty()) fail("not_an_ode", "all coefficients vanish", 0);

  // Scale to coprime integers with a positive leading coefficient.
  Integer den = 1, num = 0;
  for (const auto& a : ode.coeffs)
    for (const auto& c : a.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& a : ode.coeffs)
    for (const auto& c : a.coeffs()) {
      Integer v = Rational(c * den).get_num();
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
    }
  Rational k = make_rational(den, num);
  if (ode.coeffs.back().leading() < 0) k = -k;
  for (auto& a : ode.coeffs) a = k * a;
  return ode;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = trim(text.substr(start, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - start));
    if (item.empty()) fail("syntax_error", "empty list entry", start);
    out.push_back(parse_rational(std::string(item)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace eisenbox
