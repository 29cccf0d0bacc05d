#include "catalan/mpoly.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace catalan {

namespace {

std::atomic<std::uint32_t> g_exponent_cap{64};

ExpVec zero_exps() {
  return ExpVec{0, 0, 0, 0, 0, 0};
}

void check_exponent(std::uint32_t e) {
  if (e > g_exponent_cap.load()) {
    throw std::overflow_error("exponent " + std::to_string(e) + " exceeds cap " +
                              std::to_string(g_exponent_cap.load()));
  }
}

}  // namespace

Var var_from_name(char name) {
  for (int i = 0; i < kNumVars; ++i) {
    if (kVarNames[static_cast<std::size_t>(i)] == name) return static_cast<Var>(i);
  }
  throw std::invalid_argument(std::string("unknown variable name '") + name + "'");
}

void MPoly::set_exponent_cap(std::uint32_t cap) { g_exponent_cap.store(cap); }

std::uint32_t MPoly::exponent_cap() { return g_exponent_cap.load(); }

MPoly::MPoly(long long constant) : MPoly(BigInt(constant)) {}

MPoly::MPoly(const BigInt& constant) {
  if (constant != 0) terms_.emplace(zero_exps(), constant);
}

MPoly MPoly::variable(Var var, std::uint32_t power) {
  check_exponent(power);
  MPoly m;
  if (power == 0) return MPoly(1);
  ExpVec e = zero_exps();
  e[static_cast<std::size_t>(var)] = power;
  m.terms_.emplace(e, BigInt(1));
  return m;
}

MPoly MPoly::monomial(const BigInt& coeff, const ExpVec& exps) {
  for (std::uint32_t e : exps) check_exponent(e);
  MPoly m;
  if (coeff != 0) m.terms_.emplace(exps, coeff);
  return m;
}

BigInt MPoly::coeff(const ExpVec& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::uint32_t MPoly::degree(Var var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
  return d;
}

MPoly MPoly::coeff_of(Var var, std::uint32_t k) const {
  MPoly out;
  const auto idx = static_cast<std::size_t>(var);
  for (const auto& [e, c] : terms_) {
    if (e[idx] != k) continue;
    ExpVec reduced = e;
    reduced[idx] = 0;
    out.add_term(reduced, c);
  }
  return out;
}

void MPoly::add_term(const ExpVec& exps, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& lhs, const MPoly& rhs) {
  MPoly out;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      ExpVec e;
      for (int i = 0; i < kNumVars; ++i) {
        e[static_cast<std::size_t>(i)] =
            ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)];
        check_exponent(e[static_cast<std::size_t>(i)]);
      }
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MPoly& MPoly::operator*=(const MPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MPoly MPoly::pow(std::uint32_t k) const {
  MPoly out(1);
  for (std::uint32_t i = 0; i < k; ++i) out *= *this;
  return out;
}

BigInt MPoly::eval(const Assignment& values) const {
  BigInt total = 0;
  for (const auto& [e, c] : terms_) {
    BigInt term = c;
    for (int i = 0; i < kNumVars; ++i) {
      const auto exp = e[static_cast<std::size_t>(i)];
      if (exp > 0) term *= boost::multiprecision::pow(values[static_cast<std::size_t>(i)], exp);
    }
    total += term;
  }
  return total;
}

MPoly MPoly::substitute(Var var, const MPoly& value) const {
  const auto idx = static_cast<std::size_t>(var);
  // Powers of `value` cached up to the largest exponent actually used.
  std::vector<MPoly> powers = {MPoly(1)};
  MPoly out;
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[idx]) powers.push_back(powers.back() * value);
    ExpVec reduced = e;
    reduced[idx] = 0;
    MPoly part;
    part.terms_.emplace(reduced, c);
    out += part * powers[e[idx]];
  }
  return out;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    std::string factors;
    for (int i = 0; i < kNumVars; ++i) {
      const auto exp = e[static_cast<std::size_t>(i)];
      if (exp == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += kVarNames[static_cast<std::size_t>(i)];
      if (exp > 1) factors += '^' + std::to_string(exp);
    }
    if (factors.empty()) {
      os << mag.str();
    } else {
      if (mag != 1) os << mag.str() << '*';
      os << factors;
    }
  }
  return os.str();
}

nlohmann::ordered_json MPoly::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::ordered_json term;
    term["c"] = c.str();
    term["e"] = e;
    arr.push_back(std::move(term));
  }
  return arr;
}

MPoly MPoly::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  MPoly out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("c") || !term.contains("e")) {
      throw std::invalid_argument("polynomial term must be {\"c\":..., \"e\":...}");
    }
    const auto& ej = term["e"];
    if (!ej.is_array() || ej.size() != kNumVars) {
      throw std::invalid_argument("exponent vector must have 6 entries");
    }
    ExpVec e;
    for (int i = 0; i < kNumVars; ++i) {
      const auto& entry = ej[static_cast<std::size_t>(i)];
      if (!entry.is_number_unsigned()) throw std::invalid_argument("exponents must be nonnegative integers");
      const std::uint64_t value = entry.get<std::uint64_t>();
      check_exponent(static_cast<std::uint32_t>(value));
      e[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(value);
    }
    BigInt c;
    try {
      c = BigInt(term["c"].get<std::string>());
    } catch (const std::exception&) {
      throw std::invalid_argument("coefficient must be a decimal string");
    }
    out.add_term(e, c);
  }
  return out;
}

}  // namespace catalan
