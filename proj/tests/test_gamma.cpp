#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "catalan/contfrac.hpp"
#include "catalan/gamma.hpp"
#include "catalan/permstats.hpp"

using namespace catalan;

namespace {

// The three-variable coefficients: typeB at u = v = w = 1.
Series three_var_b(int order) {
  return jfraction_series(
      specialize(named_cf(CfType::TypeB), {{Var::u, 1}, {Var::v, 1}, {Var::w, 1}}), order);
}

long long binom(int n, int k) {
  long long value = 1;
  for (int i = 1; i <= k; ++i) value = value * (n - k + i) / i;  // exact at every step
  return value;
}

// n! / (k! k! (n-2k)!)
long long multinomial_kkn(int n, int k) { return binom(n, k) * binom(n - k, k); }

}  // namespace

TEST_CASE("gamma decomposition basics") {
  const GammaExpansion zero = gamma_decompose(MPoly());
  CHECK(zero.center2 == 0);
  REQUIRE(zero.gammas.size() == 1);
  CHECK(zero.gammas[0].is_zero());
  CHECK(zero.reconstruct().is_zero());

  const GammaExpansion just_t = gamma_decompose(var_t());
  CHECK(just_t.center2 == 2);
  REQUIRE(just_t.gammas.size() == 2);
  CHECK(just_t.gammas[0].is_zero());
  CHECK(just_t.gammas[1] == MPoly(1));

  const GammaExpansion pow5 = gamma_decompose((var_t() + 1).pow(5));
  CHECK(pow5.center2 == 5);
  REQUIRE(pow5.gammas.size() == 3);
  CHECK(pow5.gammas[0] == MPoly(1));
  CHECK(pow5.gammas[1].is_zero());
  CHECK(pow5.gammas[2].is_zero());

  // Coefficients from the other variables ride along.
  const MPoly f = (var_p() + var_q()) * var_t() * (var_t() + 1) +
                  var_w() * (var_t() + 1).pow(3);
  // Not palindromic as written: lowest t-degree 0, highest 3, but the first
  // summand is centered at 2. Shift it into the same center with t^1 (1+t)^1.
  const GammaExpansion g = gamma_decompose(var_w() * (var_t() + 1).pow(3) +
                                           (var_p() + var_q()) * var_t() * (var_t() + 1));
  CHECK(g.center2 == 3);
  CHECK(g.gammas[0] == var_w());
  CHECK(g.gammas[1] == var_p() + var_q());
  CHECK(g.reconstruct() == f);
}

TEST_CASE("gamma decomposition rejects non-palindromic input") {
  CHECK_THROWS_AS(gamma_decompose(MPoly(1) + 2 * var_t()), NotPalindromicError);
  CHECK_THROWS_AS(gamma_decompose(MPoly(1) + 3 * var_t() + 2 * var_t() * var_t()),
                  NotPalindromicError);
  // Symmetry must hold coefficient-wise in the other variables too.
  CHECK_THROWS_AS(gamma_decompose(var_p() + var_q() * var_t()), NotPalindromicError);
  // The error type is a domain error.
  CHECK_THROWS_AS(gamma_decompose(var_t() + 2), std::domain_error);

  // Palindromic but not gamma-positive inputs still decompose exactly.
  const GammaExpansion g = gamma_decompose(MPoly(1) + var_p() * var_t() + var_t() * var_t());
  CHECK(g.gammas == std::vector<MPoly>{MPoly(1), var_p() - 2});
}

TEST_CASE("listed gamma expansions of the three-variable coefficients") {
  const Series b = three_var_b(5);
  const MPoly p = var_p();
  const MPoly q = var_q();

  const GammaExpansion g1 = gamma_decompose(b.coeff(1));
  CHECK(g1.center2 == 1);
  CHECK(g1.gammas == std::vector<MPoly>{MPoly(1)});

  const GammaExpansion g2 = gamma_decompose(b.coeff(2));
  CHECK(g2.center2 == 2);
  CHECK(g2.gammas == std::vector<MPoly>{MPoly(1), p + q});

  const GammaExpansion g3 = gamma_decompose(b.coeff(3));
  CHECK(g3.center2 == 3);
  CHECK(g3.gammas == std::vector<MPoly>{MPoly(1), (p + 2) * (p + q)});

  const GammaExpansion g4 = gamma_decompose(b.coeff(4));
  CHECK(g4.center2 == 4);
  CHECK(g4.gammas == std::vector<MPoly>{MPoly(1), (p + q) * (p * p + 2 * p + 3),
                                        (p.pow(3) + p + q) * (p + q)});

  const GammaExpansion g5 = gamma_decompose(b.coeff(5));
  CHECK(g5.center2 == 5);
  CHECK(g5.gammas ==
        std::vector<MPoly>{MPoly(1), (p + q) * (p.pow(3) + 2 * p.pow(2) + 3 * p + 4),
                           (p + q) * (p.pow(5) + 2 * p.pow(4) + 2 * p.pow(3) + 2 * p.pow(2) +
                                      (2 * q + 3) * p + 3 * q)});

  for (int n = 1; n <= 5; ++n) {
    CHECK(gamma_decompose(b.coeff(n)).reconstruct() == b.coeff(n));
  }
}

TEST_CASE("x-factorization on the worked example") {
  const Permutation sigma = Permutation::parse("472589316");
  const XFactorization f5 = x_factorization(sigma, 5);
  CHECK(f5.w1 == std::vector<int>{4, 7, 2});
  CHECK(f5.w2.empty());
  CHECK(f5.w3 == std::vector<int>{8, 9});
  CHECK(f5.w4 == std::vector<int>{3, 1, 6});
  CHECK(phi_x(sigma, 5) == Permutation::parse("472895316"));
  CHECK(phi_x(sigma, 3) == Permutation::parse("472358916"));
  CHECK(phi_prime_s(sigma, {3, 4, 5}) == Permutation::parse("742389516"));
  // The hops preserve the length-4 vincular total.
  CHECK(vincular3(Permutation::parse("742389516")).total() == vincular3(sigma).total());
  CHECK_THROWS_AS(x_factorization(sigma, 0), std::invalid_argument);
  CHECK_THROWS_AS(x_factorization(sigma, 10), std::invalid_argument);
}

TEST_CASE("valley hopping is an involution that commutes") {
  for_each_permutation(5, [](const Permutation& sigma) {
    for (int x = 1; x <= 5; ++x) {
      const Permutation once = phi_prime_x(sigma, x);
      CHECK(phi_prime_x(once, x) == sigma);
      for (int y = x + 1; y <= 5; ++y) {
        CHECK(phi_prime_x(phi_prime_x(sigma, x), y) == phi_prime_x(phi_prime_x(sigma, y), x));
      }
    }
  });
}

TEST_CASE("valley hopping preserves the linked statistics") {
  for_each_permutation(6, [](const Permutation& sigma) {
    const LocalStats before = local_stats(sigma, kBoundaryZero);
    for (int x = 1; x <= 6; ++x) {
      const Permutation tau = phi_prime_x(sigma, x);
      const LocalStats after = local_stats(tau, kBoundaryZero);
      CHECK(after.pk == before.pk);
      CHECK(after.val == before.val);
      CHECK(vincular2(tau, Vincular2::S2_13) == vincular2(sigma, Vincular2::S2_13));
      CHECK(vincular2(tau, Vincular2::S31_2) == vincular2(sigma, Vincular2::S31_2));
      CHECK(vincular3(tau).total() == vincular3(sigma).total());
    }
  });
}

TEST_CASE("orbits partition with dd-free representatives") {
  const Orbit small = mfs_orbit(Permutation::parse("21"));
  CHECK(small.members ==
        std::vector<Permutation>{Permutation::parse("12"), Permutation::parse("21")});
  CHECK(small.representative == Permutation::parse("12"));

  std::set<Permutation> covered;
  for_each_permutation(5, [&covered](const Permutation& sigma) {
    if (covered.count(sigma)) return;
    const Orbit orbit = mfs_orbit(sigma);
    const LocalStats rep = local_stats(orbit.representative, kBoundaryZero);
    CHECK(rep.dd == 0);
    CHECK(orbit.members.size() == (1ull << rep.da));
    // Descent polynomial over the orbit: t^val (1 + t)^da of the rep.
    std::map<int, long long> des_hist;
    for (const Permutation& member : orbit.members) {
      CHECK(covered.insert(member).second);
      ++des_hist[des(member)];
    }
    MPoly des_poly;
    for (const auto& [d, count] : des_hist) {
      des_poly += MPoly(count) * MPoly::variable(Var::t, static_cast<std::uint32_t>(d));
    }
    CHECK(des_poly == MPoly::variable(Var::t, static_cast<std::uint32_t>(rep.val)) *
                          (var_t() + 1).pow(static_cast<std::uint32_t>(rep.da)));
  });
  CHECK(covered.size() == 120);
}

TEST_CASE("gamma coefficients by orbit representatives") {
  CHECK(gamma_via_perms(1, 0) == MPoly(1));
  CHECK(gamma_via_perms(3, 1) == var_p() + var_q());
  CHECK_THROWS_AS(gamma_via_perms(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(gamma_via_perms(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(gamma_via_perms(3, -1), std::invalid_argument);

  // Two routes to the same polynomials.
  const Series b = three_var_b(6);
  for (int n = 1; n <= 6; ++n) {
    const GammaExpansion g = gamma_decompose(b.coeff(n));
    for (int k = 0; 2 * k <= n; ++k) {
      CHECK(g.gammas[static_cast<std::size_t>(k)] == gamma_via_perms(n + 1, k));
    }
  }
}

TEST_CASE("gamma values at p = q = 1 are multinomials") {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; 2 * k <= n; ++k) {
      const MPoly gamma = gamma_via_perms(n + 1, k)
                              .substitute(Var::p, MPoly(1))
                              .substitute(Var::q, MPoly(1));
      CHECK(gamma == MPoly(multinomial_kkn(n, k)));
    }
  }
}

TEST_CASE("full six-variable gamma identity") {
  for (int n = 0; n <= 4; ++n) CHECK(full_gamma_identity_check(n));
}
