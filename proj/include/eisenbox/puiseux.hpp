#pragma once

#include <mutex>
#include <optional>
#include <vector>

#include "eisenbox/poly_in_y.hpp"
#include "eisenbox/uniseries.hpp"
#include "eisenbox/upoly.hpp"

namespace eisenbox {

/// One lower-hull edge of the Newton polygon, from (i_start, o_start) to
/// (i_end, o_end). `slope` is the root exponent γ the edge predicts, i.e.
/// minus the geometric slope: y² - x³ gives 3/2.
struct NewtonSegment {
  Rational slope;
  int i_start = 0;
  int i_end = 0;
  long lattice_length = 0;  // (i_end - i_start) / denominator(slope)
  friend bool operator==(const NewtonSegment&, const NewtonSegment&) = default;
};

struct NewtonPolygon {
  std::vector<std::pair<int, Rational>> points;  // (i, ord_x c_i) for c_i != 0
  std::vector<NewtonSegment> segments;           // increasing slope
};

/// Polygon of P in y over Q[x] (one x variable). Throws on the zero
/// polynomial and on deg_y P < 1.
NewtonPolygon newton_polygon(const PolyInY& p);
/// Same for coefficients that are Puiseux series.
NewtonPolygon newton_polygon(const std::vector<PuiseuxSeries>& coeffs);

/// Characteristic polynomial of a segment: Σ in(c_i) c^{i - i_start} over
/// the points on it.
UPoly characteristic_polynomial(const std::vector<PuiseuxSeries>& coeffs,
                                const NewtonSegment& seg);

/// Newton iteration from an exact seed. The seed must satisfy
/// ν(P(seed)) > 2e with e = ord ∂P/∂y(seed); the result is truncated at
/// `target` (further when e < 0) and satisfies ord P(x, result) > target.
/// Throws NonSimpleRoot when ∂P/∂y vanishes at the seed and SeedAccuracy
/// when the inequality fails.
PuiseuxSeries hensel_lift(const PolyInY& p, const PuiseuxSeries& seed, const Rational& target);

struct PuiseuxBranch {
  PuiseuxSeries series;
  Integer ram = 1;
  bool exact = false;  // the series is a root, not a truncation
};

/// A segment whose characteristic polynomial has no rational root left:
/// the continuation of `prefix` needs constants outside Q.
struct ExtensionReport {
  PuiseuxSeries prefix;
  Rational exponent;
  UPoly polynomial;
  int degree = 0;
  bool irreducible = false;  // certified for degree <= 3
};

struct PuiseuxResult {
  std::vector<PuiseuxBranch> branches;
  std::vector<ExtensionReport> extensions;
};

/// Q-rational Puiseux roots of a squarefree P, each truncated at
/// order / ram. Throws NotSquarefree.
PuiseuxResult puiseux_expand(const PolyInY& p, int order);

/// A root of P pinned by a seed, with a coefficient table that grows on
/// demand. Extensions are serialized by an internal mutex, so the object
/// may be shared between threads.
class AlgebraicSeries {
 public:
  AlgebraicSeries(PolyInY p, PuiseuxSeries seed);

  const PolyInY& polynomial() const { return p_; }
  /// The root truncated at `order`, extending the table if needed.
  PuiseuxSeries truncation(const Rational& order) const;
  /// f_0 .. f_n for a root on the integer grid.
  std::vector<Rational> coefficients(int n) const;
  /// Highest exponent known so far; nullopt once the root is exact.
  std::optional<Rational> reached() const;

 private:
  PolyInY p_;
  mutable std::mutex mu_;
  mutable PuiseuxSeries memo_;
};

}  // namespace eisenbox
