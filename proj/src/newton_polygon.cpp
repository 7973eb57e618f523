#include <algorithm>

#include "eisenbox/error.hpp"
#include "eisenbox/puiseux.hpp"

namespace eisenbox {

namespace {

using Point = std::pair<int, Rational>;

Rational cross(const Point& o, const Point& a, const Point& b) {
  return Rational(a.first - o.first) * (b.second - o.second) -
         (a.second - o.second) * Rational(b.first - o.first);
}

NewtonPolygon hull(std::vector<Point> pts) {
  if (pts.empty()) throw MathError("zero", "Newton polygon of the zero polynomial");
  if (pts.back().first < 1) throw InputError("no_y", "polynomial has degree 0 in y");
  NewtonPolygon np;
  np.points = pts;
  std::vector<Point> h;
  for (const auto& p : pts) {
    while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), p) <= 0) h.pop_back();
    h.push_back(p);
  }
  for (std::size_t k = 0; k + 1 < h.size(); ++k) {
    NewtonSegment s;
    s.i_start = h[k].first;
    s.i_end = h[k + 1].first;
    s.slope = (h[k].second - h[k + 1].second) / Rational(s.i_end - s.i_start);
    Integer width = s.i_end - s.i_start;
    Integer g;
    mpz_gcd(g.get_mpz_t(), width.get_mpz_t(), s.slope.get_den_mpz_t());
    s.lattice_length = to_long(width / g);
    np.segments.push_back(s);
  }
  // Left to right the geometric slope increases, so γ decreases.
  std::reverse(np.segments.begin(), np.segments.end());
  return np;
}

}  // namespace

NewtonPolygon newton_polygon(const PolyInY& p) {
  if (p.nvars() != 1) throw InputError("not_univariate", "Newton polygon needs one x variable");
  std::vector<Point> pts;
  for (int i = 0; i <= p.degree(); ++i)
    if (!p.coeff(i).is_zero()) pts.emplace_back(i, Rational(p.coeff(i).low_degree()));
  return hull(std::move(pts));
}

NewtonPolygon newton_polygon(const std::vector<PuiseuxSeries>& coeffs) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) pts.emplace_back(static_cast<int>(i), coeffs[i].order());
  return hull(std::move(pts));
}

UPoly characteristic_polynomial(const std::vector<PuiseuxSeries>& coeffs,
                                const NewtonSegment& seg) {
  const auto& first = coeffs.at(seg.i_start);
  Rational beta = first.order() + seg.slope * seg.i_start;
  std::vector<Rational> phi(seg.i_end - seg.i_start + 1);
  for (int i = seg.i_start; i <= seg.i_end; ++i) {
    const auto& c = coeffs[i];
    if (c.is_zero()) continue;
    auto [o, lead] = c.initial();
    if (o + seg.slope * i == beta) phi[i - seg.i_start] = lead;
  }
  return UPoly(std::move(phi));
}

}  // namespace eisenbox
