#include <map>
#include <stdexcept>

#include "doctest.h"

#include "catalan/insertion.hpp"
#include "catalan/permutation.hpp"

using namespace catalan;

TEST_CASE("insertion word parse and render") {
  const InsertionWord word = InsertionWord::parse("m1,m1,l2,f1,f2,f1");
  CHECK(word.size() == 6);
  CHECK(word.letter(1) == Letter{LetterKind::m, 1});
  CHECK(word.letter(3) == Letter{LetterKind::l, 2});
  CHECK(word.str() == "m1,m1,l2,f1,f2,f1");
  CHECK(InsertionWord::parse("l-1,m-1").str() == "l-1,m-1");
  CHECK(InsertionWord::parse("").size() == 0);
  CHECK_THROWS_AS(InsertionWord::parse("x1"), std::invalid_argument);
  CHECK_THROWS_AS(InsertionWord::parse("f0"), std::invalid_argument);
  CHECK_THROWS_AS(InsertionWord::parse("f"), std::invalid_argument);
}

TEST_CASE("worked encode example") {
  const Permutation sigma = Permutation::parse("423615");
  const InsertionWord word = insertion_encode(sigma);
  CHECK(word.str() == "m1,m1,l2,f1,f2,f1");
  CHECK(insertion_decode(word) == sigma);
}

TEST_CASE("small encodings") {
  CHECK(insertion_encode(Permutation()).size() == 0);
  CHECK(insertion_encode(Permutation::parse("1")).str() == "f1");
  CHECK(insertion_encode(Permutation::parse("12")).str() == "l1,f1");
  CHECK(insertion_encode(Permutation::parse("21")).str() == "r1,f1");
  CHECK(insertion_encode(Permutation::parse("231")).str() == "r1,l1,f1");
  CHECK(insertion_decode(InsertionWord()) == Permutation());
}

TEST_CASE("encode and decode are inverse on all small permutations") {
  for (int n = 0; n <= 8; ++n) {
    std::map<std::string, Permutation> seen;
    for_each_permutation(n, [&seen](const Permutation& sigma) {
      const InsertionWord word = insertion_encode(sigma);
      CHECK(word.size() == sigma.size());
      CHECK(insertion_decode(word) == sigma);
      // Injectivity of the encoding.
      CHECK(seen.emplace(word.str(), sigma).second);
    });
  }
}

TEST_CASE("decode rejects malformed words") {
  // Leaves a slot open.
  CHECK_THROWS_AS(insertion_decode(InsertionWord::parse("l1")), std::invalid_argument);
  CHECK_THROWS_AS(insertion_decode(InsertionWord::parse("m1,f1")), std::invalid_argument);
  // Targets a slot that does not exist.
  CHECK_THROWS_AS(insertion_decode(InsertionWord::parse("f2")), std::invalid_argument);
  CHECK_THROWS_AS(insertion_decode(InsertionWord::parse("m2,f1,f1")), std::invalid_argument);
  // Inserts after every slot is closed.
  CHECK_THROWS_AS(insertion_decode(InsertionWord::parse("f1,f1")), std::invalid_argument);
  CHECK_THROWS_AS(insertion_decode(InsertionWord::parse("f-2")), std::invalid_argument);
}

TEST_CASE("replay modes differ on the trailing slot") {
  // Standard: r1 then f1 closes everything, giving 21.
  {
    ReplayState replay(ReplayMode::Standard);
    replay.apply(Letter{LetterKind::r, 1});
    replay.apply(Letter{LetterKind::f, 1});
    CHECK(replay.finish() == Permutation::parse("21"));
  }
  // KeepTrailingSlot: the rightmost slot may never be filled or r-targeted.
  {
    ReplayState replay(ReplayMode::KeepTrailingSlot);
    CHECK_THROWS_AS(replay.apply(Letter{LetterKind::f, 1}), std::invalid_argument);
    CHECK_THROWS_AS(replay.apply(Letter{LetterKind::r, -1}), std::invalid_argument);
    // m splits the trailing slot: new slot, value 1, trailing slot.
    replay.apply(Letter{LetterKind::m, -1});
    CHECK(replay.open_slots() == 2);
    replay.apply(Letter{LetterKind::f, 1});  // 2 closes the non-trailing slot
    CHECK(replay.finish() == Permutation::parse("21"));
  }
  // KeepTrailingSlot finish with surplus slots is rejected.
  {
    ReplayState replay(ReplayMode::KeepTrailingSlot);
    replay.apply(Letter{LetterKind::m, 1});
    CHECK_THROWS_AS(replay.finish(), std::invalid_argument);
  }
}

TEST_CASE("eligible slots and right-indexed application") {
  ReplayState replay(ReplayMode::KeepTrailingSlot);
  CHECK(replay.eligible_slots(LetterKind::l) == 1);
  CHECK(replay.eligible_slots(LetterKind::f) == 0);
  replay.apply_from_right(LetterKind::l, 0);  // 1 lands before the trailing slot
  CHECK(replay.open_slots() == 1);
  CHECK(replay.finish() == Permutation::parse("1"));
  replay.apply_from_right(LetterKind::m, 0);  // slot, 2, trailing slot
  CHECK(replay.open_slots() == 2);
  CHECK(replay.eligible_slots(LetterKind::m) == 2);
  CHECK(replay.eligible_slots(LetterKind::f) == 1);
  CHECK(replay.eligible_slots(LetterKind::r) == 1);
  replay.apply_from_right(LetterKind::f, 0);  // only the non-trailing slot is eligible
  CHECK(replay.finish() == Permutation::parse("132"));
  CHECK_THROWS_AS(replay.apply_from_right(LetterKind::f, 0), std::invalid_argument);

  ReplayState standard(ReplayMode::Standard);
  standard.apply(Letter{LetterKind::m, 1});
  CHECK(standard.eligible_slots(LetterKind::f) == 2);
  // Right index 1 is the left slot of the two.
  standard.apply_from_right(LetterKind::f, 1);
  standard.apply_from_right(LetterKind::f, 0);
  CHECK(standard.finish() == Permutation::parse("213"));
  CHECK_THROWS_AS(standard.apply_from_right(LetterKind::f, 0), std::invalid_argument);
}
