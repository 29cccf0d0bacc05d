#include "catalan/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace catalan {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int value : word_) {
    if (value < 1 || value > n || seen[static_cast<std::size_t>(value - 1)]) {
      throw std::invalid_argument("word is not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(value - 1)] = true;
  }
  build_inverse();
}

Permutation::Permutation(std::vector<int> word, Unchecked) : word_(std::move(word)) {
  build_inverse();
}

void Permutation::build_inverse() {
  inverse_.assign(word_.size(), 0);
  for (int i = 1; i <= size(); ++i) inverse_[static_cast<std::size_t>(word_[static_cast<std::size_t>(i - 1)] - 1)] = i;
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("permutation size must be nonnegative");
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word), Unchecked{});
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> word;
  if (text.find_first_of(", \t") != std::string::npos) {
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
      std::istringstream ts(token);
      int value = 0;
      while (ts >> value) word.push_back(value);
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("permutation digits must be 1..9");
      word.push_back(c - '0');
    }
  }
  return Permutation(std::move(word));
}

std::string Permutation::str() const {
  std::string out;
  if (size() <= 9) {
    for (int value : word_) out += static_cast<char>('0' + value);
    return out;
  }
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(word_[i]);
  }
  return out;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  if (n < 0) throw std::invalid_argument("permutation size must be nonnegative");
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    fn(Permutation(word, Permutation::Unchecked{}));
  } while (std::next_permutation(word.begin(), word.end()));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&out](const Permutation& sigma) { out.push_back(sigma); });
  return out;
}

}  // namespace catalan
