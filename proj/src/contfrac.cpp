#include "catalan/contfrac.hpp"

#include <algorithm>
#include <stdexcept>

namespace catalan {

Series jfraction_series_at_depth(const JFraction& cf, int order, int depth) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  // G_depth = 1; G_k = 1 / (1 - b_k z - lam_{k+1} z^2 G_{k+1}).
  // Level k first contributes at z^{2k}, so G_k is only needed to order
  // order - 2k; anything beyond that can never reach G_0 and would only
  // inflate intermediate exponents.
  const auto level_order = [order](int k) { return std::max(0, order - 2 * k); };
  Series g = Series::one(level_order(depth));
  for (int k = depth - 1; k >= 0; --k) {
    const int ok = level_order(k);
    Series denom = Series::one(ok);
    if (ok >= 1) {
      MPoly c1 = denom.coeff(1) - cf.b(k);
      denom.set_coeff(1, std::move(c1));
    }
    if (ok >= 2) {
      const MPoly lam = cf.lam(k + 1);
      for (int n = 2; n <= ok; ++n) {
        denom.set_coeff(n, denom.coeff(n) - lam * g.coeff(n - 2));
      }
    }
    g = denom.inverse();
  }
  return g;
}

Series jfraction_series(const JFraction& cf, int order) {
  // Level k first contributes at z^{2k}, so depth ceil(order/2)+1 is exact.
  const int depth = (order + 1) / 2 + 1;
  return jfraction_series_at_depth(cf, order, depth);
}

Series sfraction_series_at_depth(const SFraction& cf, int order, int depth) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  // G_{depth+1} = 1; G_k = 1 / (1 - c_k z G_{k+1}).
  // Level k first contributes at z^{k-1}, so G_k is only needed to order
  // order - (k - 1); see jfraction_series_at_depth.
  const auto level_order = [order](int k) { return std::max(0, order - (k - 1)); };
  Series g = Series::one(level_order(depth + 1));
  for (int k = depth; k >= 1; --k) {
    const int ok = level_order(k);
    Series denom = Series::one(ok);
    const MPoly c = cf.c(k);
    for (int n = 1; n <= ok; ++n) {
      denom.set_coeff(n, denom.coeff(n) - c * g.coeff(n - 1));
    }
    g = denom.inverse();
  }
  return g;
}

Series sfraction_series(const SFraction& cf, int order) {
  // Level k first contributes at z^k.
  return sfraction_series_at_depth(cf, order, order + 1);
}

JFraction contract(const SFraction& cf) {
  const auto c = cf.c;
  JFraction out;
  out.b = [c](int k) { return k == 0 ? c(1) : c(2 * k) + c(2 * k + 1); };
  out.lam = [c](int k) { return k == 1 ? c(1) * c(2) : c(2 * k - 1) * c(2 * k); };
  return out;
}

JFraction named_cf(CfType type) {
  JFraction out;
  switch (type) {
    case CfType::TypeA:
      out.b = [](int k) {
        if (k == 0) return var_u();
        return (MPoly::variable(Var::p, static_cast<std::uint32_t>(k)) +
                MPoly::variable(Var::q, static_cast<std::uint32_t>(k))) *
               var_u();
      };
      out.lam = [](int k) {
        return var_w() * var_t() * MPoly::variable(Var::p, static_cast<std::uint32_t>(k)) *
               MPoly::variable(Var::q, static_cast<std::uint32_t>(k - 1));
      };
      return out;
    case CfType::TypeB:
      out.b = [](int k) {
        return MPoly::variable(Var::p, static_cast<std::uint32_t>(k)) *
               (var_u() + var_t() * var_v());
      };
      out.lam = [](int k) {
        if (k == 1) return (var_p() + var_q()) * var_t() * var_w();
        return MPoly::variable(Var::p, static_cast<std::uint32_t>(2 * k - 1)) * var_t() * var_w();
      };
      return out;
    case CfType::TypeC:
      out.b = [](int k) {
        return MPoly::variable(Var::q, static_cast<std::uint32_t>(k)) *
               (var_u() + var_v() * var_t());
      };
      out.lam = [](int k) {
        return var_w() * var_t() * MPoly::variable(Var::q, static_cast<std::uint32_t>(2 * k - 1));
      };
      return out;
  }
  throw std::invalid_argument("unknown continued fraction type");
}

SFraction qcatalan_bar_sfraction() {
  SFraction out;
  out.c = [](int k) {
    if (k % 2 == 1) return MPoly::variable(Var::q, static_cast<std::uint32_t>((k - 1) / 2));
    return MPoly(1);
  };
  return out;
}

SFraction qcatalan_tilde_sfraction() {
  SFraction out;
  out.c = [](int k) {
    if (k % 2 == 0) return MPoly::variable(Var::q, static_cast<std::uint32_t>(k / 2));
    return MPoly(1);
  };
  return out;
}

JFraction specialize(const JFraction& cf, const std::vector<std::pair<Var, BigInt>>& values) {
  const auto apply = [values](MPoly poly) {
    for (const auto& [var, value] : values) poly = poly.substitute(var, MPoly(value));
    return poly;
  };
  JFraction out;
  out.b = [b = cf.b, apply](int k) { return apply(b(k)); };
  out.lam = [lam = cf.lam, apply](int k) { return apply(lam(k)); };
  return out;
}

}  // namespace catalan
