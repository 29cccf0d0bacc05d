#pragma once

#include <vector>

#include "catalan/mpoly.hpp"

namespace catalan {

// Truncated formal power series in z with MPoly coefficients: coefficients
// for z^0 .. z^order are stored exactly, everything above is discarded.
// Arithmetic requires both operands to carry the same order.
class Series {
 public:
  explicit Series(int order);  // zero series of the given order
  Series(int order, std::vector<MPoly> coeffs);  // coeffs.size() must be order+1

  static Series one(int order);

  int order() const { return order_; }
  const MPoly& coeff(int n) const;
  void set_coeff(int n, MPoly value);

  Series operator-() const;
  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
  friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }
  friend Series operator*(const Series& lhs, const Series& rhs);

  friend bool operator==(const Series& lhs, const Series& rhs) {
    return lhs.order_ == rhs.order_ && lhs.coeffs_ == rhs.coeffs_;
  }
  friend bool operator!=(const Series& lhs, const Series& rhs) { return !(lhs == rhs); }

  // Multiplicative inverse; requires the constant coefficient to be exactly 1,
  // otherwise throws std::domain_error.
  Series inverse() const;

  // JSON contract: {"order": N, "coeffs": [poly, poly, ...]} with order+1
  // coefficient entries.
  nlohmann::ordered_json to_json() const;
  static Series from_json(const nlohmann::json& j);

 private:
  void check_same_order(const Series& rhs) const;

  int order_ = 0;
  std::vector<MPoly> coeffs_;
};

}  // namespace catalan
