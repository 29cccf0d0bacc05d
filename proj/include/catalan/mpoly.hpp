#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace catalan {

using BigInt = boost::multiprecision::cpp_int;

// The fixed coefficient alphabet. The series variable z is never part of a
// polynomial; Series tracks powers of z positionally.
enum class Var : int { p = 0, q = 1, t = 2, u = 3, v = 4, w = 5 };

inline constexpr int kNumVars = 6;
inline constexpr std::array<char, kNumVars> kVarNames = {'p', 'q', 't', 'u', 'v', 'w'};

Var var_from_name(char name);  // throws std::invalid_argument on unknown name

// Exponent vector, ordered (e_p, e_q, e_t, e_u, e_v, e_w). The std::array
// comparison is lexicographic, which is the canonical term order everywhere
// (serialization, rendering, iteration).
using ExpVec = std::array<std::uint32_t, kNumVars>;

// One integer value per variable, indexed by Var.
using Assignment = std::array<BigInt, kNumVars>;

// Sparse exact multivariate polynomial over {p,q,t,u,v,w} with arbitrary
// precision integer coefficients. Immutable value semantics: every operation
// returns a new canonical polynomial (no zero terms, one term per exponent
// vector).
class MPoly {
 public:
  MPoly() = default;  // zero polynomial
  MPoly(long long constant);
  MPoly(const BigInt& constant);

  static MPoly variable(Var var, std::uint32_t power = 1);
  static MPoly monomial(const BigInt& coeff, const ExpVec& exps);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ExpVec, BigInt>& terms() const { return terms_; }

  // Coefficient of an exact exponent vector (0 when absent).
  BigInt coeff(const ExpVec& exps) const;
  // Largest exponent of `var` appearing in any term (0 for the zero poly).
  std::uint32_t degree(Var var) const;
  // Polynomial multiplying var^k, with var removed from the result.
  MPoly coeff_of(Var var, std::uint32_t k) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  friend MPoly operator+(MPoly lhs, const MPoly& rhs) { return lhs += rhs; }
  friend MPoly operator-(MPoly lhs, const MPoly& rhs) { return lhs -= rhs; }
  friend MPoly operator*(const MPoly& lhs, const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs);
  MPoly pow(std::uint32_t k) const;

  friend bool operator==(const MPoly& lhs, const MPoly& rhs) { return lhs.terms_ == rhs.terms_; }
  friend bool operator!=(const MPoly& lhs, const MPoly& rhs) { return !(lhs == rhs); }

  // Exact value under a full assignment of all six variables.
  BigInt eval(const Assignment& values) const;
  // Exact composition: replace `var` by the polynomial `value`.
  MPoly substitute(Var var, const MPoly& value) const;

  // Canonical rendering, terms in ascending exponent order, e.g.
  // "1 + 2*t + t^2 + q*t + p*t".
  std::string str() const;

  // JSON contract: array of {"c": "<decimal>", "e": [e_p,...,e_w]} sorted
  // lexicographically by "e".
  nlohmann::ordered_json to_json() const;
  static MPoly from_json(const nlohmann::json& j);

  // Exponents are capped; multiplication or substitution pushing any exponent
  // beyond the cap throws std::overflow_error.
  static void set_exponent_cap(std::uint32_t cap);
  static std::uint32_t exponent_cap();

 private:
  void add_term(const ExpVec& exps, const BigInt& coeff);

  std::map<ExpVec, BigInt> terms_;
};

inline MPoly operator*(MPoly lhs, long long rhs) { return lhs * MPoly(rhs); }
inline MPoly operator*(long long lhs, const MPoly& rhs) { return MPoly(lhs) * rhs; }

// Convenience factories for readable expression building.
inline MPoly var_p() { return MPoly::variable(Var::p); }
inline MPoly var_q() { return MPoly::variable(Var::q); }
inline MPoly var_t() { return MPoly::variable(Var::t); }
inline MPoly var_u() { return MPoly::variable(Var::u); }
inline MPoly var_v() { return MPoly::variable(Var::v); }
inline MPoly var_w() { return MPoly::variable(Var::w); }

}  // namespace catalan
