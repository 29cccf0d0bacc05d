#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "catalan/config.hpp"
#include "catalan/contfrac.hpp"
#include "catalan/patternclass.hpp"

using namespace catalan;

namespace {

const long long kCatalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
const long long kCentralBinomial[] = {1, 2, 6, 20, 70, 252, 924, 3432};

struct BruteCapGuard {
  int saved = config::bruteforce_cap();
  ~BruteCapGuard() { config::set_bruteforce_cap(saved); }
};

}  // namespace

TEST_CASE("class names and patterns") {
  CHECK(class_from_name("a321") == PatternClassId::A321);
  CHECK(class_from_name("a312") == PatternClassId::A312);
  CHECK(class_from_name("b4") == PatternClassId::B4);
  CHECK_THROWS_AS(class_from_name("a123"), std::invalid_argument);
  for (PatternClassId id : {PatternClassId::A321, PatternClassId::A312, PatternClassId::B4}) {
    CHECK(class_from_name(class_name(id)) == id);
  }
  CHECK(class_patterns(PatternClassId::A321) ==
        std::vector<Permutation>{Permutation::parse("321")});
  CHECK(class_patterns(PatternClassId::B4).size() == 4);
}

TEST_CASE("class membership") {
  CHECK(class_member(Permutation::parse("2413"), PatternClassId::A321));
  CHECK_FALSE(class_member(Permutation::parse("321"), PatternClassId::A321));
  CHECK(class_member(Permutation::parse("123"), PatternClassId::A312));
  CHECK_FALSE(class_member(Permutation::parse("4312"), PatternClassId::A312));
  CHECK(class_member(Permutation::parse("45312"), PatternClassId::B4));
  CHECK_FALSE(class_member(Permutation::parse("3124"), PatternClassId::B4));
}

TEST_CASE("class sizes match the counting sequences") {
  for (int n = 0; n <= 7; ++n) {
    CHECK(generate_class(n, PatternClassId::A321).size() ==
          static_cast<std::size_t>(kCatalan[n]));
    CHECK(generate_class(n, PatternClassId::A312).size() ==
          static_cast<std::size_t>(kCatalan[n]));
    // S_n members of the four-pattern class, counted by binom(2(n-1), n-1).
    const std::size_t expected =
        n == 0 ? 1 : static_cast<std::size_t>(kCentralBinomial[n - 1]);
    CHECK(generate_class(n, PatternClassId::B4).size() == expected);
  }
}

TEST_CASE("grammar generation equals brute-force filtering") {
  for (int n = 0; n <= 7; ++n) {
    for (PatternClassId id : {PatternClassId::A321, PatternClassId::A312, PatternClassId::B4}) {
      const std::vector<Permutation> generated = generate_class(n, id);
      std::vector<Permutation> sorted = generated;
      std::sort(sorted.begin(), sorted.end());
      CHECK(sorted == perms_avoiding_bruteforce(n, class_patterns(id)));
      // No duplicates.
      CHECK(std::set<Permutation>(generated.begin(), generated.end()).size() == generated.size());
    }
  }
}

TEST_CASE("generated words replay to the emitted permutation") {
  for (PatternClassId id : {PatternClassId::A321, PatternClassId::A312, PatternClassId::B4}) {
    std::vector<std::string> words;
    generate_class(5, id, [&](const Permutation& sigma, const InsertionWord& word) {
      words.push_back(word.str());
      CHECK(word.size() == 5);
      if (id == PatternClassId::A321) {
        // Keep-trailing replay: rebuild and compare.
        ReplayState replay(ReplayMode::KeepTrailingSlot);
        for (const Letter& letter : word.letters()) replay.apply(letter);
        CHECK(replay.finish() == sigma);
      } else {
        CHECK(insertion_decode(word) == sigma);
      }
    });
    // Words arrive in lexicographic order with kinds ordered f < l < m < r.
    CHECK(std::is_sorted(words.begin(), words.end()));
  }
}

TEST_CASE("B4 words touch slot 2 only with the fill letter at two open slots") {
  generate_class(6, PatternClassId::B4, [](const Permutation&, const InsertionWord& word) {
    ReplayState replay(ReplayMode::Standard);
    for (const Letter& letter : word.letters()) {
      if (letter.slot != 1) {
        CHECK(letter.slot == 2);
        CHECK(letter.kind == LetterKind::f);
        CHECK(replay.open_slots() == 2);
      }
      replay.apply(letter);
    }
    CHECK(replay.open_slots() == 0);
  });
}

TEST_CASE("brute-force cap guards exhaustive scans") {
  BruteCapGuard guard;
  config::set_bruteforce_cap(5);
  CHECK_THROWS_AS(perms_avoiding_bruteforce(6, class_patterns(PatternClassId::A321)),
                  std::runtime_error);
  CHECK(perms_avoiding_bruteforce(5, class_patterns(PatternClassId::A321)).size() == 42);
}

TEST_CASE("class polynomials at low degree") {
  CHECK(class_polynomial(0, PatternClassId::A321) == MPoly(1));
  // S_1(321) = {1}: under (0, infinity) the single letter is a double ascent.
  CHECK(class_polynomial(1, PatternClassId::A321) == var_u());
  // S_2(321) = {12, 21}: u^2 and p t w.
  CHECK(class_polynomial(2, PatternClassId::A321) ==
        var_u() * var_u() + var_p() * var_t() * var_w());
  CHECK(class_polynomial(1, PatternClassId::A312) == var_u() + var_v() * var_t());
  const MPoly b0 = var_u() + var_t() * var_v();
  CHECK(class_polynomial(2, PatternClassId::A312) ==
        b0 * b0 + var_q() * var_t() * var_w());
  CHECK(class_polynomial(2, PatternClassId::B4) ==
        b0 * b0 + (var_p() + var_q()) * var_t() * var_w());
}

TEST_CASE("class polynomials equal continued fraction coefficients") {
  const Series a = jfraction_series(named_cf(CfType::TypeA), 6);
  const Series b = jfraction_series(named_cf(CfType::TypeB), 6);
  const Series c = jfraction_series(named_cf(CfType::TypeC), 6);
  for (int n = 0; n <= 6; ++n) {
    CHECK(class_polynomial(n, PatternClassId::A321) == a.coeff(n));
    CHECK(class_polynomial(n, PatternClassId::B4) == b.coeff(n));
    CHECK(class_polynomial(n, PatternClassId::A312) == c.coeff(n));
  }
}

TEST_CASE("321-class polynomial specializations") {
  // At p = t = u = w = 1 only q survives: row 3 of the bar table is 4 + q.
  const MPoly c3 = class_polynomial(3, PatternClassId::A321)
                       .substitute(Var::p, MPoly(1))
                       .substitute(Var::t, MPoly(1))
                       .substitute(Var::u, MPoly(1))
                       .substitute(Var::w, MPoly(1));
  CHECK(c3 == MPoly(4) + var_q());
}
