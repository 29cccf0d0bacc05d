#include <stdexcept>

#include "doctest.h"

#include "catalan/series.hpp"

using namespace catalan;

namespace {

Series geometric_denominator(int order) {
  Series s = Series::one(order);
  s.set_coeff(1, MPoly(-1));
  return s;
}

}  // namespace

TEST_CASE("series construction and access") {
  Series s(4);
  for (int n = 0; n <= 4; ++n) CHECK(s.coeff(n).is_zero());
  s.set_coeff(2, var_t());
  CHECK(s.coeff(2) == var_t());
  CHECK_THROWS_AS(s.coeff(5), std::out_of_range);
  CHECK_THROWS_AS(s.set_coeff(-1, MPoly(1)), std::out_of_range);
  CHECK_THROWS_AS(Series(2, {MPoly(1), MPoly(2)}), std::invalid_argument);
}

TEST_CASE("series arithmetic requires equal orders") {
  const Series a = Series::one(3);
  const Series b = Series::one(4);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a - b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("series multiplication truncates") {
  // (1 + z)^2 at order 1 keeps only 1 + 2z.
  Series s = Series::one(1);
  s.set_coeff(1, MPoly(1));
  const Series sq = s * s;
  CHECK(sq.coeff(0) == MPoly(1));
  CHECK(sq.coeff(1) == MPoly(2));
}

TEST_CASE("series inverse of 1 - z is geometric") {
  const Series inv = geometric_denominator(10).inverse();
  for (int n = 0; n <= 10; ++n) CHECK(inv.coeff(n) == MPoly(1));
}

TEST_CASE("series inverse of 1 - z - z^2 is Fibonacci") {
  Series s = Series::one(10);
  s.set_coeff(1, MPoly(-1));
  s.set_coeff(2, MPoly(-1));
  const Series inv = s.inverse();
  const long long fib[] = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
  for (int n = 0; n <= 10; ++n) CHECK(inv.coeff(n) == MPoly(fib[n]));
}

TEST_CASE("series inverse of 1 - t z is geometric in t") {
  Series s = Series::one(6);
  s.set_coeff(1, -var_t());
  const Series inv = s.inverse();
  for (int n = 0; n <= 6; ++n) {
    CHECK(inv.coeff(n) == MPoly::variable(Var::t, static_cast<std::uint32_t>(n)));
  }
}

TEST_CASE("series inverse is a two-sided inverse") {
  Series s = Series::one(8);
  s.set_coeff(1, var_p() - 2 * var_q());
  s.set_coeff(3, var_t() * var_u());
  s.set_coeff(8, MPoly(-5));
  CHECK(s * s.inverse() == Series::one(8));
  CHECK(s.inverse().inverse() == s);
}

TEST_CASE("series inverse requires unit constant term") {
  Series two = Series::one(3);
  two.set_coeff(0, MPoly(2));
  CHECK_THROWS_AS(two.inverse(), std::domain_error);
  CHECK_THROWS_AS(Series(3).inverse(), std::domain_error);
}

TEST_CASE("series json round trip") {
  Series s(3);
  s.set_coeff(0, MPoly(1));
  s.set_coeff(2, var_p() * var_t() + 4);
  const auto j = s.to_json();
  CHECK(j["order"] == 3);
  REQUIRE(j["coeffs"].size() == 4);
  const Series back = Series::from_json(j);
  CHECK(back == s);
  CHECK_THROWS_AS(Series::from_json(nlohmann::json::parse(R"({"order":2,"coeffs":[[]]})")),
                  std::invalid_argument);
}
