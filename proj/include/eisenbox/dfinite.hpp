#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "eisenbox/exactnum.hpp"
#include "eisenbox/poly_in_y.hpp"
#include "eisenbox/upoly.hpp"

namespace eisenbox {

/// a_d(x) f^(d) + ... + a_1(x) f' + a_0(x) f = 0 with a_i in Z[x].
struct LinearODE {
  std::vector<UPoly> coeffs;  // a_0 .. a_d

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const LinearODE&, const LinearODE&) = default;
};

/// p_0(ℓ) f_ℓ + p_1(ℓ) f_{ℓ+1} + ... + p_e(ℓ) f_{ℓ+e} = 0 for ℓ >= start.
/// `initial` holds f_0 .. f_{start+e-1}.
struct PRecurrence {
  std::vector<UPoly> coeffs;  // p_0 .. p_e in Z[ℓ]
  long start = 0;
  std::vector<Rational> initial;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const PRecurrence&, const PRecurrence&) = default;
};

/// Least N >= 0 with p(ℓ) != 0 for every integer ℓ >= N.
long validity_offset(const UPoly& leading);

/// Validates and normalizes a recurrence: trims vanishing leading
/// coefficients, raises `start` to the validity offset and to the length of
/// the supplied initial values, and checks that the recurrence reproduces
/// the initial values wherever it already applies.
PRecurrence make_recurrence(std::vector<UPoly> coeffs, std::vector<Rational> initial,
                            long start = 0);

/// f_0 .. f_{count-1}.
std::vector<Rational> expand(const PRecurrence& rec, std::size_t count);

/// Coefficient extraction: x^n [Σ a_k f^(k)] = 0 rewritten in ℓ. The
/// result carries no initial values and start = its validity offset.
PRecurrence ode_to_recurrence(const LinearODE& ode);

/// Linear ODE annihilating the roots of P (univariate x), from the first
/// ℚ(x)-linear dependency among f, f', f'', ... reduced modulo P. The seed
/// is checked to pin a simple root.
LinearODE algebraic_to_ode(const PolyInY& p, const PuiseuxSeries& seed);

struct GrowthReport {
  std::vector<unsigned long> s;   // s_ℓ = Ω(lcm(b_0..b_ℓ))
  std::vector<double> ratio;      // s_ℓ / (ℓ ln ℓ), 0 for ℓ < 2
  double K = 0;                   // max ratio over ℓ >= 2
  std::size_t argmax = 0;         // first ℓ attaining K
  Integer lcm = 1;
  std::map<Integer, Rational> envelope_slopes;  // filled on request
};

/// With `envelopes` set, padic_profile slopes are added for every prime of
/// the final lcm.
GrowthReport prime_count_profile(const std::vector<Rational>& coeffs,
                                 std::uint64_t factor_cap = kDefaultFactorCap,
                                 bool envelopes = false);

/// ν_p(f_ℓ) per index and the lower envelope slope: the largest m with
/// v_ℓ >= v_{ℓ0} + m (ℓ - ℓ0) for every observed ℓ, where v = min(ν_p, 0)
/// and ℓ0 is the first index with f_ℓ != 0.
struct PadicProfile {
  Integer p;
  std::vector<std::optional<long>> valuations;  // nullopt for f_ℓ = 0
  std::optional<long> anchor;                   // first ℓ with f_ℓ != 0
  Rational slope = 0;
};

PadicProfile padic_profile(const std::vector<Rational>& coeffs, const Integer& p);

}  // namespace eisenbox
