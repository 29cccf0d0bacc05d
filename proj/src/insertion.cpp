#include "catalan/insertion.hpp"

#include <sstream>
#include <stdexcept>

namespace catalan {

char letter_kind_name(LetterKind kind) {
  switch (kind) {
    case LetterKind::f: return 'f';
    case LetterKind::l: return 'l';
    case LetterKind::m: return 'm';
    case LetterKind::r: return 'r';
  }
  throw std::invalid_argument("unknown letter kind");
}

InsertionWord::InsertionWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const Letter& letter : letters_) {
    if (letter.slot == 0) throw std::invalid_argument("slot index must be nonzero");
  }
}

InsertionWord InsertionWord::parse(const std::string& text) {
  std::vector<Letter> letters;
  std::istringstream is(text);
  std::string token;
  while (std::getline(is, token, ',')) {
    // trim surrounding spaces
    const auto begin = token.find_first_not_of(" \t");
    if (begin == std::string::npos) throw std::invalid_argument("empty letter token");
    const auto end = token.find_last_not_of(" \t");
    token = token.substr(begin, end - begin + 1);
    Letter letter;
    switch (token[0]) {
      case 'f': letter.kind = LetterKind::f; break;
      case 'l': letter.kind = LetterKind::l; break;
      case 'm': letter.kind = LetterKind::m; break;
      case 'r': letter.kind = LetterKind::r; break;
      default: throw std::invalid_argument("letter kind must be one of m,l,r,f");
    }
    try {
      std::size_t used = 0;
      letter.slot = std::stoi(token.substr(1), &used);
      if (used != token.size() - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad slot index in letter '" + token + "'");
    }
    if (letter.slot == 0) throw std::invalid_argument("slot index must be nonzero");
    letters.push_back(letter);
  }
  return InsertionWord(std::move(letters));
}

std::string InsertionWord::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) out += ',';
    out += letter_kind_name(letters_[i].kind);
    out += std::to_string(letters_[i].slot);
  }
  return out;
}

ReplayState::ReplayState(ReplayMode mode) : mode_(mode) { items_.push_back(0); }

int ReplayState::resolve(int slot_index) const {
  if (slot_index == 0 || slot_index > slots_ || slot_index < -slots_) {
    throw std::invalid_argument("slot index " + std::to_string(slot_index) +
                                " out of range for " + std::to_string(slots_) + " open slots");
  }
  const int target = slot_index > 0 ? slot_index : slots_ + slot_index + 1;
  int seen = 0;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (items_[i] == 0 && ++seen == target) return static_cast<int>(i);
  }
  throw std::logic_error("slot bookkeeping out of sync");
}

void ReplayState::apply(const Letter& letter) {
  const int idx = resolve(letter.slot);
  if (mode_ == ReplayMode::KeepTrailingSlot &&
      (letter.kind == LetterKind::f || letter.kind == LetterKind::r)) {
    // The trailing slot is the rightmost one; f and r would destroy or pass it.
    const int rightmost = resolve(-1);
    if (idx == rightmost) {
      throw std::invalid_argument("letter may not fill or right-insert into the trailing slot");
    }
  }
  const int value = next_value_++;
  const auto at = items_.begin() + idx;
  switch (letter.kind) {
    case LetterKind::m:
      items_.insert(at, {0, value});  // slot, value, then the targeted slot
      ++slots_;
      break;
    case LetterKind::l:
      items_.insert(at, value);
      break;
    case LetterKind::r:
      items_.insert(at + 1, value);
      break;
    case LetterKind::f:
      *at = value;
      --slots_;
      break;
  }
}

int ReplayState::eligible_slots(LetterKind kind) const {
  if (mode_ == ReplayMode::KeepTrailingSlot &&
      (kind == LetterKind::f || kind == LetterKind::r)) {
    return slots_ - 1;
  }
  return slots_;
}

void ReplayState::apply_from_right(LetterKind kind, int right_index) {
  const int eligible = eligible_slots(kind);
  if (right_index < 0 || right_index >= eligible) {
    throw std::invalid_argument("right slot index " + std::to_string(right_index) +
                                " out of range for " + std::to_string(eligible) +
                                " eligible slots");
  }
  apply(Letter{kind, eligible - right_index});
}

Permutation ReplayState::finish() const {
  const int want = mode_ == ReplayMode::Standard ? 0 : 1;
  if (slots_ != want) {
    throw std::invalid_argument("replay left " + std::to_string(slots_) +
                                " open slots, expected " + std::to_string(want));
  }
  if (mode_ == ReplayMode::KeepTrailingSlot && items_.back() != 0) {
    throw std::logic_error("trailing slot is not at the end");
  }
  std::vector<int> word;
  word.reserve(items_.size());
  for (int item : items_) {
    if (item != 0) word.push_back(item);
  }
  return Permutation(std::move(word));
}

InsertionWord insertion_encode(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(n));
  // Open slots as intervals of positions still holding values >= the value
  // being inserted; they are maintained in left-to-right order.
  struct Slot {
    int lo, hi;
  };
  std::vector<Slot> slots;
  if (n > 0) slots.push_back({1, n});
  for (int value = 1; value <= n; ++value) {
    const int pos = sigma.position_of(value);
    std::size_t si = 0;
    while (si < slots.size() && !(slots[si].lo <= pos && pos <= slots[si].hi)) ++si;
    if (si == slots.size()) throw std::logic_error("insertion encode lost track of slots");
    const Slot s = slots[si];
    Letter letter;
    letter.slot = static_cast<int>(si) + 1;
    if (s.lo == pos && s.hi == pos) {
      letter.kind = LetterKind::f;
      slots.erase(slots.begin() + static_cast<std::ptrdiff_t>(si));
    } else if (pos == s.lo) {
      letter.kind = LetterKind::l;
      slots[si].lo = pos + 1;
    } else if (pos == s.hi) {
      letter.kind = LetterKind::r;
      slots[si].hi = pos - 1;
    } else {
      letter.kind = LetterKind::m;
      slots[si] = {pos + 1, s.hi};
      slots.insert(slots.begin() + static_cast<std::ptrdiff_t>(si), {s.lo, pos - 1});
    }
    letters.push_back(letter);
  }
  return InsertionWord(std::move(letters));
}

Permutation insertion_decode(const InsertionWord& word) {
  if (word.size() == 0) return Permutation();
  ReplayState state(ReplayMode::Standard);
  for (const Letter& letter : word.letters()) state.apply(letter);
  return state.finish();
}

}  // namespace catalan
