#pragma once

#include <vector>

#include "eisenbox/tseries.hpp"

namespace eisenbox {

/// x_n^d + a_1 x_n^{d-1} + ... + a_d with a_i(0) = 0. The a_i are series
/// in the same ring that do not involve x_n.
struct DistinguishedPolynomial {
  int d = 0;
  std::size_t nvars = 0;
  int cap = 0;
  std::vector<TSeries> a;  // a_1 .. a_d

  /// The polynomial itself as a series in x_1..x_n.
  TSeries as_series() const;
  friend bool operator==(const DistinguishedPolynomial&, const DistinguishedPolynomial&) = default;
};

struct Preparation {
  DistinguishedPolynomial poly;
  TSeries unit;
};

struct Division {
  int d = 0;
  TSeries q;
  TSeries r;  // degree < d in x_n
};

/// Order of f(0, ..., 0, x_n) within the cap. Throws RegularityFailure
/// when it vanishes up to the cap.
int regularity_order(const TSeries& f);

/// g = f q + r modulo total degree > cap, with deg_{x_n} r < d. Writing
/// f = x_n^d u + h (h the part of x_n-degree < d), Q = u q is the fixed
/// point of Q = Quot(g - h u^{-1} Q), computed modulo the weight
/// α_n + (d+1)|α'| > (d+1) cap + d, which determines q and r to degree cap.
/// Every known input term below that weight is used, including terms above
/// `cap`, so exact inputs give the truncation of the exact q and r.
Division divide(const TSeries& g, const TSeries& f, int cap);

/// f = P u: P = x_n^d - r and u = q^{-1} from the division of x_n^d by f.
Preparation prepare(const TSeries& f, int cap);

}  // namespace eisenbox
