#include "catalan/series.hpp"

#include <stdexcept>

namespace catalan {

Series::Series(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, MPoly());
}

Series::Series(int order, std::vector<MPoly> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  if (coeffs_.size() != static_cast<std::size_t>(order) + 1) {
    throw std::invalid_argument("series needs exactly order+1 coefficients");
  }
}

Series Series::one(int order) {
  Series s(order);
  s.coeffs_[0] = MPoly(1);
  return s;
}

const MPoly& Series::coeff(int n) const {
  if (n < 0 || n > order_) throw std::out_of_range("series coefficient index out of range");
  return coeffs_[static_cast<std::size_t>(n)];
}

void Series::set_coeff(int n, MPoly value) {
  if (n < 0 || n > order_) throw std::out_of_range("series coefficient index out of range");
  coeffs_[static_cast<std::size_t>(n)] = std::move(value);
}

void Series::check_same_order(const Series& rhs) const {
  if (order_ != rhs.order_) throw std::invalid_argument("series order mismatch");
}

Series Series::operator-() const {
  Series out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Series& Series::operator+=(const Series& rhs) {
  check_same_order(rhs);
  for (int n = 0; n <= order_; ++n) coeffs_[static_cast<std::size_t>(n)] += rhs.coeffs_[static_cast<std::size_t>(n)];
  return *this;
}

Series& Series::operator-=(const Series& rhs) {
  check_same_order(rhs);
  for (int n = 0; n <= order_; ++n) coeffs_[static_cast<std::size_t>(n)] -= rhs.coeffs_[static_cast<std::size_t>(n)];
  return *this;
}

Series operator*(const Series& lhs, const Series& rhs) {
  lhs.check_same_order(rhs);
  Series out(lhs.order_);
  for (int n = 0; n <= lhs.order_; ++n) {
    MPoly acc;
    for (int k = 0; k <= n; ++k) {
      const MPoly& a = lhs.coeffs_[static_cast<std::size_t>(k)];
      const MPoly& b = rhs.coeffs_[static_cast<std::size_t>(n - k)];
      if (a.is_zero() || b.is_zero()) continue;
      acc += a * b;
    }
    out.coeffs_[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return out;
}

Series Series::inverse() const {
  if (coeffs_[0] != MPoly(1)) {
    throw std::domain_error("series inverse requires constant coefficient 1");
  }
  // b_0 = 1 and b_n = -sum_{k=1..n} a_k b_{n-k}.
  Series out(order_);
  out.coeffs_[0] = MPoly(1);
  for (int n = 1; n <= order_; ++n) {
    MPoly acc;
    for (int k = 1; k <= n; ++k) {
      const MPoly& a = coeffs_[static_cast<std::size_t>(k)];
      const MPoly& b = out.coeffs_[static_cast<std::size_t>(n - k)];
      if (a.is_zero() || b.is_zero()) continue;
      acc += a * b;
    }
    out.coeffs_[static_cast<std::size_t>(n)] = -acc;
  }
  return out;
}

nlohmann::ordered_json Series::to_json() const {
  nlohmann::ordered_json j;
  j["order"] = order_;
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const auto& c : coeffs_) coeffs.push_back(c.to_json());
  j["coeffs"] = std::move(coeffs);
  return j;
}

Series Series::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs")) {
    throw std::invalid_argument("series JSON must be {\"order\":..., \"coeffs\":...}");
  }
  const int order = j["order"].get<int>();
  const auto& coeffs = j["coeffs"];
  if (!coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(order) + 1) {
    throw std::invalid_argument("series JSON needs order+1 coefficients");
  }
  std::vector<MPoly> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(MPoly::from_json(c));
  return Series(order, std::move(out));
}

}  // namespace catalan
