#include "catalan/patternclass.hpp"

#include <stdexcept>

#include "catalan/config.hpp"

namespace catalan {

namespace {

std::vector<Permutation> make_patterns(PatternClassId id) {
  switch (id) {
    case PatternClassId::A321:
      return {Permutation({3, 2, 1})};
    case PatternClassId::A312:
      return {Permutation({3, 1, 2})};
    case PatternClassId::B4:
      return {Permutation({3, 1, 2, 4}), Permutation({4, 1, 2, 3}), Permutation({3, 1, 4, 2}),
              Permutation({4, 1, 3, 2})};
  }
  throw std::invalid_argument("unknown pattern class");
}

// Letters licensed in a state with `slots` open slots, in ascending
// (kind, slot) order.
std::vector<Letter> licensed_letters(PatternClassId id, int slots) {
  switch (id) {
    case PatternClassId::A312:
      return {Letter{LetterKind::f, 1}, Letter{LetterKind::l, 1}, Letter{LetterKind::m, 1},
              Letter{LetterKind::r, 1}};
    case PatternClassId::B4:
      if (slots == 2) {
        return {Letter{LetterKind::f, 1}, Letter{LetterKind::f, 2}, Letter{LetterKind::l, 1},
                Letter{LetterKind::m, 1}, Letter{LetterKind::r, 1}};
      }
      return {Letter{LetterKind::f, 1}, Letter{LetterKind::l, 1}, Letter{LetterKind::m, 1},
              Letter{LetterKind::r, 1}};
    case PatternClassId::A321:
      if (slots == 1) return {Letter{LetterKind::l, -1}, Letter{LetterKind::m, -1}};
      return {Letter{LetterKind::f, 1}, Letter{LetterKind::l, -1}, Letter{LetterKind::l, 1},
              Letter{LetterKind::m, -1}};
  }
  throw std::invalid_argument("unknown pattern class");
}

int slot_delta(LetterKind kind) {
  switch (kind) {
    case LetterKind::m: return 1;
    case LetterKind::f: return -1;
    case LetterKind::l:
    case LetterKind::r: return 0;
  }
  return 0;
}

}  // namespace

const std::vector<Permutation>& class_patterns(PatternClassId id) {
  static const std::vector<Permutation> a321 = make_patterns(PatternClassId::A321);
  static const std::vector<Permutation> a312 = make_patterns(PatternClassId::A312);
  static const std::vector<Permutation> b4 = make_patterns(PatternClassId::B4);
  switch (id) {
    case PatternClassId::A321: return a321;
    case PatternClassId::A312: return a312;
    case PatternClassId::B4: return b4;
  }
  throw std::invalid_argument("unknown pattern class");
}

std::string class_name(PatternClassId id) {
  switch (id) {
    case PatternClassId::A321: return "a321";
    case PatternClassId::A312: return "a312";
    case PatternClassId::B4: return "b4";
  }
  throw std::invalid_argument("unknown pattern class");
}

PatternClassId class_from_name(const std::string& name) {
  if (name == "a321") return PatternClassId::A321;
  if (name == "a312") return PatternClassId::A312;
  if (name == "b4") return PatternClassId::B4;
  throw std::invalid_argument("unknown pattern class name '" + name + "'");
}

bool class_member(const Permutation& sigma, PatternClassId id) {
  for (const Permutation& pattern : class_patterns(id)) {
    if (contains(sigma, pattern)) return false;
  }
  return true;
}

void generate_class(int n, PatternClassId id,
                    const std::function<void(const Permutation&, const InsertionWord&)>& sink) {
  if (n < 0) throw std::invalid_argument("class size must be nonnegative");
  if (n == 0) {
    sink(Permutation(), InsertionWord());
    return;
  }
  const ReplayMode mode =
      id == PatternClassId::A321 ? ReplayMode::KeepTrailingSlot : ReplayMode::Standard;
  // Open-slot target at the end of the word, and the matching reachability
  // prune: every letter changes the slot count by at most +1 and f lowers it
  // by one, so `slots - target` never exceeds the remaining letter budget on
  // any completable prefix.
  const int target = mode == ReplayMode::KeepTrailingSlot ? 1 : 0;
  std::vector<Letter> word;
  word.reserve(static_cast<std::size_t>(n));

  std::function<void(int, int)> walk = [&](int slots, int remaining) {
    if (remaining == 0) {
      InsertionWord w{word};
      ReplayState replay(mode);
      for (const Letter& letter : w.letters()) replay.apply(letter);
      sink(replay.finish(), w);
      return;
    }
    if (slots == 0) return;  // standard-mode dead end: no slot left to insert into
    for (const Letter& letter : licensed_letters(id, slots)) {
      const int next_slots = slots + slot_delta(letter.kind);
      if (next_slots - target > remaining - 1) continue;
      if (next_slots < target) continue;
      word.push_back(letter);
      walk(next_slots, remaining - 1);
      word.pop_back();
    }
  };
  walk(1, n);
}

std::vector<Permutation> generate_class(int n, PatternClassId id) {
  std::vector<Permutation> out;
  generate_class(n, id, [&out](const Permutation& sigma, const InsertionWord&) {
    out.push_back(sigma);
  });
  return out;
}

std::vector<Permutation> perms_avoiding_bruteforce(int n, const std::vector<Permutation>& patterns) {
  if (n > config::bruteforce_cap()) {
    throw std::runtime_error("brute-force filter for n=" + std::to_string(n) +
                             " exceeds cap " + std::to_string(config::bruteforce_cap()));
  }
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& sigma) {
    for (const Permutation& pattern : patterns) {
      if (contains(sigma, pattern)) return;
    }
    out.push_back(sigma);
  });
  return out;
}

MPoly class_polynomial(int n, PatternClassId id) {
  if (n < 0) throw std::invalid_argument("polynomial degree must be nonnegative");
  MPoly sum;
  switch (id) {
    case PatternClassId::A321:
      generate_class(n, id, [&sum](const Permutation& sigma, const InsertionWord&) {
        const LocalStats stats = local_stats(sigma, kBoundaryInfinity);
        ExpVec e{};
        e[static_cast<std::size_t>(Var::p)] = static_cast<std::uint32_t>(hat_2_13(sigma));
        e[static_cast<std::size_t>(Var::q)] = static_cast<std::uint32_t>(vincular2(sigma, Vincular2::S31_2));
        e[static_cast<std::size_t>(Var::t)] = static_cast<std::uint32_t>(des(sigma));
        e[static_cast<std::size_t>(Var::u)] = static_cast<std::uint32_t>(stats.da);
        e[static_cast<std::size_t>(Var::w)] = static_cast<std::uint32_t>(stats.val);
        sum += MPoly::monomial(1, e);
      });
      return sum;
    case PatternClassId::B4:
      generate_class(n + 1, id, [&sum](const Permutation& sigma, const InsertionWord&) {
        const LocalStats stats = local_stats(sigma, kBoundaryZero);
        ExpVec e{};
        e[static_cast<std::size_t>(Var::p)] = static_cast<std::uint32_t>(vincular2(sigma, Vincular2::S2_13));
        e[static_cast<std::size_t>(Var::q)] = static_cast<std::uint32_t>(vincular2(sigma, Vincular2::S31_2));
        e[static_cast<std::size_t>(Var::t)] = static_cast<std::uint32_t>(des(sigma));
        e[static_cast<std::size_t>(Var::u)] = static_cast<std::uint32_t>(stats.da);
        e[static_cast<std::size_t>(Var::v)] = static_cast<std::uint32_t>(stats.dd);
        e[static_cast<std::size_t>(Var::w)] = static_cast<std::uint32_t>(stats.val);
        sum += MPoly::monomial(1, e);
      });
      return sum;
    case PatternClassId::A312:
      generate_class(n + 1, id, [&sum](const Permutation& sigma, const InsertionWord&) {
        const LocalStats stats = local_stats(sigma, kBoundaryZero);
        ExpVec e{};
        e[static_cast<std::size_t>(Var::q)] = static_cast<std::uint32_t>(vincular2(sigma, Vincular2::S2_13));
        e[static_cast<std::size_t>(Var::t)] = static_cast<std::uint32_t>(des(sigma));
        e[static_cast<std::size_t>(Var::u)] = static_cast<std::uint32_t>(stats.da);
        e[static_cast<std::size_t>(Var::v)] = static_cast<std::uint32_t>(stats.dd);
        e[static_cast<std::size_t>(Var::w)] = static_cast<std::uint32_t>(stats.val);
        sum += MPoly::monomial(1, e);
      });
      return sum;
  }
  throw std::invalid_argument("unknown pattern class");
}

}  // namespace catalan
