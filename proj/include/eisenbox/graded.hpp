#pragma once

#include <map>
#include <optional>
#include <vector>

#include "eisenbox/mpoly.hpp"
#include "eisenbox/poly_in_y.hpp"
#include "eisenbox/weights.hpp"

namespace eisenbox {

/// numerator / a^power with the numerator ω-homogeneous and not divisible
/// by a when power > 0.
struct GradedPiece {
  MPoly numerator;
  int power = 0;
  friend bool operator==(const GradedPiece&, const GradedPiece&) = default;
};

/// ξ = Σ_ℓ a_ℓ(x) / a(x)^{m_ℓ}, pieces indexed by ω-weight ℓ <= cap.
/// `base_power` is the least k >= 1 with m_ℓ <= k (⌈ℓ - lo⌉ + 1) for every
/// piece, so ξ = Σ b_ℓ / (a^k)^{⌈ℓ - lo⌉ + 1} with polynomial b_ℓ.
/// With ram = q > 1 the variables stand for x_i^{1/q}.
struct GradedSeries {
  WeightVector omega;
  MPoly a;
  Rational e = 0;     // ν_ω(a)
  Rational lo = 0;    // lowest weight of a nonzero piece
  Rational cap = 0;
  int base_power = 1;
  int ram = 1;
  std::map<Rational, GradedPiece> pieces;

  /// b_ℓ = a_ℓ a^{k(⌈ℓ - lo⌉ + 1) - m_ℓ}.
  MPoly normalized_numerator(const Rational& weight) const;
  friend bool operator==(const GradedSeries&, const GradedSeries&) = default;
};

/// Graded Newton iteration for a root of P(x, y) (integer seed polynomial,
/// any number of x variables): after x -> t^ω x the root is Σ_ℓ ξ_ℓ t^ℓ and
/// ξ_s = -[t^{s+e}] P(x, Σ_{ℓ<s} ξ_ℓ t^ℓ) / a, where a t^e is the initial
/// part of ∂P/∂y at the seed. Requires ν_ω(P(x, seed)) > 2e.
GradedSeries graded_root_lift(const PolyInY& p, const WeightVector& w, const MPoly& seed,
                              const Rational& cap);

/// graded_root_lift of P(x_1^q, ..., x_n^q, y) with weights ω/q; the seed
/// is written in the substituted variables. Weights keep their original
/// meaning and exponents are on the (1/q)-grid.
GradedSeries graded_puiseux(const PolyInY& p, const WeightVector& w, int q, const MPoly& seed,
                            const Rational& cap);

/// ord(f) - ord(g), or ν_ω(f) - ν_ω(g) when weights are given.
Rational completion_norm(const MPoly& f, const MPoly& g,
                         const std::optional<WeightVector>& w = std::nullopt);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// ψ_λ: x^α ↦ x^{α + λ⟨ω,α⟩β}, i.e. α ↦ αM on row vectors with
/// M = I + λ ω β^T. det M = χ(λ) = 1 + λ⟨β,ω⟩ and
/// M^{-1} = I - λ ω β^T / χ(λ).
struct MonomialMap {
  Rational lambda;
  std::vector<Rational> omega;
  std::vector<Rational> beta;
  RationalMatrix matrix;
  RationalMatrix inverse;
  Rational chi;

  std::vector<Rational> apply(const std::vector<Rational>& alpha) const;
  std::vector<Rational> apply_inverse(const std::vector<Rational>& alpha) const;
};

/// Throws MathError when χ(λ) = 0.
MonomialMap psi_lambda(const Rational& lambda, const std::vector<Rational>& omega,
                       const std::vector<Rational>& beta);

/// Gaussian elimination over Q.
Rational determinant(RationalMatrix m);
/// Gauss-Jordan inverse; throws MathError on a singular matrix.
RationalMatrix matrix_inverse(RationalMatrix m);

/// γ + σ with σ spanned by integer generators (none: σ = {0}).
struct Cone {
  std::vector<std::vector<long>> generators;
  std::vector<long> translate;
  bool strongly_convex = false;
  // How the cone was obtained.
  long lambda = 0;
  std::vector<long> refined_omega;
  std::vector<long> beta;

  /// p ∈ γ + σ, decided by linear programming.
  bool contains(const std::vector<long>& p) const;
  friend bool operator==(const Cone&, const Cone&) = default;
};

/// No nonzero v with v and -v both in the cone spanned by `generators`.
bool is_strongly_convex(const std::vector<std::vector<long>>& generators, std::size_t dim);

/// Exponents of the Laurent expansion of the pieces: 1/a^m is expanded
/// around the initial monomial x^β of a for the refined weight
/// ω' = ω_int + rank, where `direction` lists the variables from the
/// first (rank 1) to the last (rank n); each 1/(1 + h)^m is kept to
/// `depth` powers of h. Throws InputError when ω' ties on a.
std::vector<std::vector<long>> laurent_support(const GradedSeries& g,
                                               const std::vector<std::size_t>& direction,
                                               int depth);

/// Support cone of the truncated expansion: the smallest natural λ with
/// ψ_λ(S) >= 0 gives σ = ψ_λ^{-1}(R_{>=0}^n); γ is an integer point with
/// ψ_λ(γ) below min ψ_λ(S) componentwise. A single support point gives
/// σ = {0} and γ = that point.
Cone support_cone(const GradedSeries& g, const std::vector<std::size_t>& direction, int depth);

}  // namespace eisenbox
