#pragma once

#include <string>
#include <vector>

#include "catalan/permutation.hpp"

namespace catalan {

// Letters of the insertion encoding. Permutations of {1..n} are built by
// inserting the values 1, 2, ..., n into open slots (written as boxes); a
// letter says how the next value lands in its slot:
//   m: box -> box value box   (middle, the slot splits)
//   l: box -> value box       (left end, the slot survives on the right)
//   r: box -> box value       (right end, the slot survives on the left)
//   f: box -> value           (fill, the slot closes)
// Enumerators are ordered alphabetically; word comparisons and generation
// order rely on it.
enum class LetterKind { f = 0, l = 1, m = 2, r = 3 };

char letter_kind_name(LetterKind kind);

struct Letter {
  LetterKind kind;
  // 1-based slot index counted from the left; negative values count from the
  // right (-1 is the rightmost slot). Zero is invalid.
  int slot = 1;

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.kind == b.kind && a.slot == b.slot;
  }
};

// A word in the insertion alphabet, e.g. "m1,m1,l2,f1,f2,f1".
class InsertionWord {
 public:
  InsertionWord() = default;
  explicit InsertionWord(std::vector<Letter> letters);

  static InsertionWord parse(const std::string& text);
  std::string str() const;

  int size() const { return static_cast<int>(letters_.size()); }
  const Letter& letter(int i) const { return letters_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<Letter>& letters() const { return letters_; }

  friend bool operator==(const InsertionWord& a, const InsertionWord& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator!=(const InsertionWord& a, const InsertionWord& b) { return !(a == b); }

 private:
  std::vector<Letter> letters_;
};

// Replay semantics. Standard: the initial configuration is a single slot and
// a complete word closes every slot. KeepTrailingSlot: the rightmost slot is
// a permanent stand-in for the unwritten tail of the permutation; f and r may
// never target it, and a complete word leaves exactly that slot open.
enum class ReplayMode { Standard, KeepTrailingSlot };

class ReplayState {
 public:
  explicit ReplayState(ReplayMode mode);

  int open_slots() const { return slots_; }
  int inserted() const { return next_value_ - 1; }

  // Applies the letter to the next value 1, 2, 3, ... Throws
  // std::invalid_argument on a slot index out of range or an f/r aimed at the
  // trailing slot in KeepTrailingSlot mode.
  void apply(const Letter& letter);

  // Number of slots the kind may target under the mode's restriction.
  int eligible_slots(LetterKind kind) const;
  // Applies the letter targeting the index-th eligible slot counted from the
  // right, 0-based. Used by the history bijections, whose labels are exactly
  // these right-hand indices.
  void apply_from_right(LetterKind kind, int right_index);

  // Final permutation. Standard mode requires zero open slots,
  // KeepTrailingSlot mode exactly one.
  Permutation finish() const;

 private:
  int resolve(int slot_index) const;  // signed slot index -> items_ position

  ReplayMode mode_;
  std::vector<int> items_;  // 0 marks an open slot, positive entries are values
  int slots_ = 1;
  int next_value_ = 1;
};

// Canonical word for sigma: value i lands in the i-th configuration slot
// counted from the left, and each letter kind is forced by where the value
// sits inside its slot. Standard replay of the result returns sigma.
InsertionWord insertion_encode(const Permutation& sigma);

// Standard replay. Throws std::invalid_argument if any letter is invalid or
// the word does not close every slot.
Permutation insertion_decode(const InsertionWord& word);

}  // namespace catalan
