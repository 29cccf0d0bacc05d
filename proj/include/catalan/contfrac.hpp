#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "catalan/series.hpp"

namespace catalan {

// Jacobi-type continued fraction
//   F(z) = 1 / (1 - b_0 z - lam_1 z^2 / (1 - b_1 z - lam_2 z^2 / ...)).
// Coefficients are closed-form callables so one description serves every
// truncation order.
struct JFraction {
  std::function<MPoly(int)> b;    // level k >= 0
  std::function<MPoly(int)> lam;  // level k >= 1
};

// Stieltjes-type continued fraction
//   F(z) = 1 / (1 - c_1 z / (1 - c_2 z / ...)).
struct SFraction {
  std::function<MPoly(int)> c;  // level k >= 1
};

// Taylor expansion to z^order. Levels below ceil(order/2)+1 cannot influence
// the truncation, so evaluation substitutes the tail beyond that depth by 1
// and folds the ladder bottom-up.
Series jfraction_series(const JFraction& cf, int order);
Series sfraction_series(const SFraction& cf, int order);

// Same expansion with an explicit tail depth (tail G_depth := 1). Exposed so
// tests can demonstrate the truncation is stable in the depth.
Series jfraction_series_at_depth(const JFraction& cf, int order, int depth);
Series sfraction_series_at_depth(const SFraction& cf, int order, int depth);

// Even contraction of a Stieltjes fraction into the Jacobi fraction with the
// same Taylor expansion: b_0 = c_1, b_k = c_{2k} + c_{2k+1} (k >= 1),
// lam_1 = c_1 c_2, lam_k = c_{2k-1} c_{2k} (k >= 2).
JFraction contract(const SFraction& cf);

// The three master continued fractions, as Jacobi data over p,q,t,u,v,w.
//
// TypeA: b_0 = u, b_k = (p^k + q^k) u, lam_k = w t p^k q^{k-1}.
//   Expansion enumerates 321-avoiding permutations.
// TypeB: b_k = p^k (u + t v), lam_1 = (p + q) t w, lam_k = p^{2k-1} t w.
//   Expansion enumerates permutations avoiding 3124, 4123, 3142 and 4132;
//   coefficients at all-ones are the central binomials binom(2n, n).
// TypeC: b_k = q^k (u + v t), lam_k = w t q^{2k-1}.
//   Expansion enumerates 312-avoiding permutations, shifted by one.
enum class CfType { TypeA, TypeB, TypeC };

JFraction named_cf(CfType type);

// Stieltjes data for the two classical q-Catalan expansions: "bar" puts the
// q-powers on the odd levels (c_1 = 1, c_{2k} = 1, c_{2k+1} = q^k), "tilde"
// on the even levels (c_{2k} = q^k, c_{2k+1} = 1).
SFraction qcatalan_bar_sfraction();
SFraction qcatalan_tilde_sfraction();

// New fraction with the given integer values substituted into every
// coefficient. Unlisted variables stay symbolic.
JFraction specialize(const JFraction& cf, const std::vector<std::pair<Var, BigInt>>& values);

}  // namespace catalan
