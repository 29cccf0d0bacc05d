#include "catalan/gamma.hpp"

#include <algorithm>
#include <set>

#include "catalan/patternclass.hpp"
#include "catalan/permstats.hpp"

namespace catalan {

MPoly GammaExpansion::reconstruct() const {
  const MPoly one_plus_t = MPoly(1) + var_t();
  MPoly out;
  for (std::size_t k = 0; k < gammas.size(); ++k) {
    out += gammas[k] * MPoly::variable(Var::t, static_cast<std::uint32_t>(k)) *
           one_plus_t.pow(static_cast<std::uint32_t>(center2) - 2 * static_cast<std::uint32_t>(k));
  }
  return out;
}

GammaExpansion gamma_decompose(const MPoly& f) {
  GammaExpansion out;
  if (f.is_zero()) {
    out.center2 = 0;
    out.gammas = {MPoly()};
    return out;
  }
  std::uint32_t lo = MPoly::exponent_cap();
  std::uint32_t hi = 0;
  for (const auto& [e, c] : f.terms()) {
    lo = std::min(lo, e[static_cast<std::size_t>(Var::t)]);
    hi = std::max(hi, e[static_cast<std::size_t>(Var::t)]);
  }
  const std::uint32_t n = lo + hi;  // symmetry center times two
  for (std::uint32_t i = 0; i <= n / 2; ++i) {
    if (f.coeff_of(Var::t, i) != f.coeff_of(Var::t, n - i)) {
      throw NotPalindromicError("coefficients of t^" + std::to_string(i) + " and t^" +
                                std::to_string(n - i) + " differ");
    }
  }
  out.center2 = static_cast<int>(n);
  const MPoly one_plus_t = MPoly(1) + var_t();
  MPoly residual = f;
  for (std::uint32_t k = 0; k <= n / 2; ++k) {
    // Only the k-th basis element still reaches degree n - k.
    MPoly gamma = residual.coeff_of(Var::t, n - k);
    if (!gamma.is_zero()) {
      residual -= gamma * MPoly::variable(Var::t, k) * one_plus_t.pow(n - 2 * k);
    }
    out.gammas.push_back(std::move(gamma));
  }
  if (!residual.is_zero()) {
    throw NotPalindromicError("residual " + residual.str() + " after extracting all gammas");
  }
  return out;
}

XFactorization x_factorization(const Permutation& sigma, int x) {
  const int n = sigma.size();
  if (x < 1 || x > n) throw std::invalid_argument("x must be a value of the permutation");
  const int pos = sigma.position_of(x);
  int left = pos - 1;
  while (left >= 1 && sigma(left) > x) --left;
  int right = pos + 1;
  while (right <= n && sigma(right) > x) ++right;
  XFactorization out;
  out.x = x;
  for (int i = 1; i <= left; ++i) out.w1.push_back(sigma(i));
  for (int i = left + 1; i < pos; ++i) out.w2.push_back(sigma(i));
  for (int i = pos + 1; i < right; ++i) out.w3.push_back(sigma(i));
  for (int i = right; i <= n; ++i) out.w4.push_back(sigma(i));
  return out;
}

Permutation phi_x(const Permutation& sigma, int x) {
  XFactorization f = x_factorization(sigma, x);
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(sigma.size()));
  word.insert(word.end(), f.w1.begin(), f.w1.end());
  word.insert(word.end(), f.w3.begin(), f.w3.end());
  word.push_back(f.x);
  word.insert(word.end(), f.w2.begin(), f.w2.end());
  word.insert(word.end(), f.w4.begin(), f.w4.end());
  return Permutation(std::move(word));
}

Permutation phi_prime_x(const Permutation& sigma, int x) {
  if (classify_value(sigma, x, kBoundaryZero) == ValueClass::Valley) return sigma;
  return phi_x(sigma, x);
}

Permutation phi_prime_s(const Permutation& sigma, const std::vector<int>& values) {
  Permutation out = sigma;
  for (int x : values) out = phi_prime_x(out, x);
  return out;
}

Orbit mfs_orbit(const Permutation& sigma) {
  const int n = sigma.size();
  std::set<Permutation> seen;
  std::vector<Permutation> frontier = {sigma};
  seen.insert(sigma);
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& member : frontier) {
      for (int x = 1; x <= n; ++x) {
        Permutation hopped = phi_prime_x(member, x);
        if (seen.insert(hopped).second) next.push_back(std::move(hopped));
      }
    }
    frontier = std::move(next);
  }
  Orbit out;
  out.members.assign(seen.begin(), seen.end());
  const Permutation* rep = nullptr;
  for (const Permutation& member : out.members) {
    if (local_stats(member, kBoundaryZero).dd == 0) {
      if (rep != nullptr) throw std::logic_error("orbit has two dd-free members");
      rep = &member;
    }
  }
  if (rep == nullptr) throw std::logic_error("orbit has no dd-free member");
  out.representative = *rep;
  return out;
}

MPoly gamma_via_perms(int n1, int k) {
  if (n1 < 1) throw std::invalid_argument("size must be at least 1");
  if (k < 0 || 2 * k > n1 - 1) throw std::invalid_argument("index k out of range");
  MPoly sum;
  generate_class(n1, PatternClassId::B4, [&](const Permutation& sigma, const InsertionWord&) {
    const LocalStats stats = local_stats(sigma, kBoundaryZero);
    if (stats.dd != 0 || stats.val != k) return;
    ExpVec e{};
    e[static_cast<std::size_t>(Var::p)] =
        static_cast<std::uint32_t>(vincular2(sigma, Vincular2::S2_13));
    e[static_cast<std::size_t>(Var::q)] =
        static_cast<std::uint32_t>(vincular2(sigma, Vincular2::S31_2));
    sum += MPoly::monomial(1, e);
  });
  return sum;
}

bool full_gamma_identity_check(int n) {
  const MPoly lhs = class_polynomial(n, PatternClassId::B4);
  const MPoly tw = var_t() * var_w();
  const MPoly u_tv = var_u() + var_t() * var_v();
  MPoly rhs;
  for (int k = 0; 2 * k <= n; ++k) {
    rhs += gamma_via_perms(n + 1, k) * tw.pow(static_cast<std::uint32_t>(k)) *
           u_tv.pow(static_cast<std::uint32_t>(n - 2 * k));
  }
  return lhs == rhs;
}

}  // namespace catalan
