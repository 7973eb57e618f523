#pragma once

// Text input. Grammar:
//
//   expr   := ["-"] term (("+" | "-") term)*
//   term   := factor ("*" factor)*
//   factor := base ("^" nat)?
//   base   := nat | nat "/" nat | var | "(" expr ")"
//   var    := "x" | "x"digits | "y" | "t"
//
// "−" (U+2212) is accepted for "-". Errors are InputError with the byte
// offset of the offending token in the message.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eisenbox/dfinite.hpp"
#include "eisenbox/mpoly.hpp"
#include "eisenbox/poly_in_y.hpp"

namespace eisenbox {

struct ExprAST {
  enum class Kind { Literal, Variable, Add, Sub, Neg, Mul, Pow };
  Kind kind = Kind::Literal;
  Rational value;    // Literal
  std::string name;  // Variable
  unsigned exponent = 0;  // Pow
  std::size_t pos = 0;
  std::vector<std::unique_ptr<ExprAST>> children;
};

std::unique_ptr<ExprAST> parse_expr(std::string_view text);

/// Names in canonical order: the x family ("x" or "x1".."xn"), then "t",
/// then "y".
std::vector<std::string> collect_variables(const ExprAST& ast);

struct ParsedPoly {
  MPoly poly;
  std::vector<std::string> names;

  bool has_y() const { return !names.empty() && names.back() == "y"; }
};

/// Parses a polynomial. With `expected_vars` the variables must come from
/// that list and the result uses its order; otherwise the order is the
/// canonical one of collect_variables.
ParsedPoly parse_poly(std::string_view text,
                      const std::optional<std::vector<std::string>>& expected_vars = std::nullopt);

/// Parses P(x, y): y becomes the last variable and at least one x variable
/// is present (a lone "x" is added when the text mentions none).
ParsedPoly parse_poly_in_y(std::string_view text);

/// Parses a homogeneous linear ODE in f, f', f'', ... with coefficients in
/// Q[x], such as "2*(1+x)*f' - f" or "f' - f = 0". Coefficients are scaled
/// to coprime integers with a positive leading coefficient.
LinearODE parse_ode(std::string_view text);

/// Comma-separated rationals, e.g. "0,1" or "1, -1/2".
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace eisenbox
