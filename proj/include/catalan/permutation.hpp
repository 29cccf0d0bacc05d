#pragma once

#include <functional>
#include <string>
#include <vector>

namespace catalan {

// A permutation of {1, ..., n} in one-line notation, immutable after
// construction. Positions and values are both 1-based.
class Permutation {
 public:
  Permutation() = default;  // the empty permutation
  explicit Permutation(std::vector<int> word);  // validates bijectivity

  static Permutation identity(int n);
  // Accepts compact digit strings ("423615") or comma/space separated values
  // ("4,2,3,6,1,5"); entries above 9 require the separated form.
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(word_.size()); }
  // Value at position i, 1 <= i <= n.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  // Position holding `value`, the inverse permutation.
  int position_of(int value) const { return inverse_[static_cast<std::size_t>(value - 1)]; }
  const std::vector<int>& word() const { return word_; }

  // Compact digits when n <= 9, comma separated otherwise.
  std::string str() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.word_ == b.word_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.word_ < b.word_; }

 private:
  friend void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);
  struct Unchecked {};
  Permutation(std::vector<int> word, Unchecked);
  void build_inverse();

  std::vector<int> word_;
  std::vector<int> inverse_;
};

// Calls fn for every permutation of {1..n} in lexicographic order. n = 0
// yields the empty permutation once.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

std::vector<Permutation> all_permutations(int n);

}  // namespace catalan
