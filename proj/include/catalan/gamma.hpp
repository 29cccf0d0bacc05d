#pragma once

#include <stdexcept>
#include <vector>

#include "catalan/mpoly.hpp"
#include "catalan/permutation.hpp"

namespace catalan {

// A polynomial whose coefficients in t are symmetric about (r+s)/2, where r
// and s are the lowest and highest t-degrees, expands uniquely in the basis
// t^k (1+t)^{center2 - 2k}. Coefficients may involve the other variables.
struct GammaExpansion {
  int center2 = 0;            // r + s
  std::vector<MPoly> gammas;  // gamma_0 .. gamma_{floor(center2/2)}, t-free

  MPoly reconstruct() const;  // sum of gamma_k t^k (1+t)^(center2-2k)
};

class NotPalindromicError : public std::domain_error {
 public:
  explicit NotPalindromicError(const std::string& what) : std::domain_error(what) {}
};

// Unique gamma expansion, extracted top degree first: gamma_k is the
// coefficient of t^(center2-k) in the residual, which is then eliminated.
// Throws NotPalindromicError when the input is not palindromic in t (detected
// by a nonzero final residual or asymmetric coefficients).
GammaExpansion gamma_decompose(const MPoly& f);

// The x-factorization sigma = w1 w2 x w3 w4 where w2 and w3 are the maximal
// contiguous blocks of letters exceeding x adjacent to x (either may be
// empty).
struct XFactorization {
  std::vector<int> w1, w2, w3, w4;
  int x = 0;
};

XFactorization x_factorization(const Permutation& sigma, int x);

// Valley hopping: phi_x swaps the blocks w2 and w3 around x. phi_prime_x
// additionally fixes valleys of sigma (peaks are automatically fixed because
// both their blocks are empty); boundary convention (0,0) throughout.
Permutation phi_x(const Permutation& sigma, int x);
Permutation phi_prime_x(const Permutation& sigma, int x);
// Applies phi_prime_x for every x in the set; the hops commute, so the order
// does not matter.
Permutation phi_prime_s(const Permutation& sigma, const std::vector<int>& values);

// Orbit of sigma under all phi_prime_x, sorted; the representative is the
// unique member with no double descent.
struct Orbit {
  std::vector<Permutation> members;
  Permutation representative;
};

Orbit mfs_orbit(const Permutation& sigma);

// Gamma coefficient by orbit representatives: the sum of
// p^(2-13) q^(31-2) over the members of S_{n1}(3124,4123,3142,4132) with
// dd = 0 and val = des = k under the (0,0) boundary. Requires n1 >= 1 and
// 0 <= k <= floor((n1-1)/2).
MPoly gamma_via_perms(int n1, int k);

// Full six-variable identity: the degree-n class polynomial of the B4 class
// equals sum_k gamma_via_perms(n+1, k) (t w)^k (u + t v)^(n-2k).
bool full_gamma_identity_check(int n);

}  // namespace catalan
