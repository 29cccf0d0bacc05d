#include "catalan/permstats.hpp"

#include <algorithm>
#include <stdexcept>

namespace catalan {

namespace {

// Neighbour values under the boundary convention. All entries of sigma are
// at most n, so n+1 serves as the sentinel for both Infinity and NPlusOne;
// the conventions only differ in how the sentinel is interpreted by pattern
// statistics, never in comparisons against entries.
int left_neighbour(const Permutation& sigma, int pos) {
  return pos == 1 ? 0 : sigma(pos - 1);
}

int right_neighbour(const Permutation& sigma, int pos, Boundary b) {
  if (pos < sigma.size()) return sigma(pos + 1);
  return b.right == RightBoundary::Zero ? 0 : sigma.size() + 1;
}

}  // namespace

ValueClass classify_position(const Permutation& sigma, int pos, Boundary b) {
  if (pos < 1 || pos > sigma.size()) throw std::out_of_range("position out of range");
  const int here = sigma(pos);
  const bool ascent_in = left_neighbour(sigma, pos) < here;
  const bool ascent_out = here < right_neighbour(sigma, pos, b);
  if (ascent_in && !ascent_out) return ValueClass::Peak;
  if (!ascent_in && ascent_out) return ValueClass::Valley;
  if (ascent_in && ascent_out) return ValueClass::DoubleAscent;
  return ValueClass::DoubleDescent;
}

ValueClass classify_value(const Permutation& sigma, int value, Boundary b) {
  if (value < 1 || value > sigma.size()) throw std::out_of_range("value out of range");
  return classify_position(sigma, sigma.position_of(value), b);
}

LocalStats local_stats(const Permutation& sigma, Boundary b) {
  LocalStats out;
  for (int pos = 1; pos <= sigma.size(); ++pos) {
    const int value = sigma(pos);
    switch (classify_position(sigma, pos, b)) {
      case ValueClass::Peak:
        ++out.pk;
        out.peaks.push_back(value);
        break;
      case ValueClass::Valley:
        ++out.val;
        out.valleys.push_back(value);
        break;
      case ValueClass::DoubleAscent:
        ++out.da;
        out.double_ascents.push_back(value);
        break;
      case ValueClass::DoubleDescent:
        ++out.dd;
        out.double_descents.push_back(value);
        break;
    }
  }
  std::sort(out.peaks.begin(), out.peaks.end());
  std::sort(out.valleys.begin(), out.valleys.end());
  std::sort(out.double_ascents.begin(), out.double_ascents.end());
  std::sort(out.double_descents.begin(), out.double_descents.end());
  return out;
}

int des(const Permutation& sigma) {
  int count = 0;
  for (int i = 1; i < sigma.size(); ++i) {
    if (sigma(i) > sigma(i + 1)) ++count;
  }
  return count;
}

std::vector<int> descent_positions(const Permutation& sigma) {
  std::vector<int> out;
  for (int i = 1; i < sigma.size(); ++i) {
    if (sigma(i) > sigma(i + 1)) out.push_back(i);
  }
  return out;
}

int vincular2_at(const Permutation& sigma, Vincular2 which, int pos) {
  if (pos < 1 || pos > sigma.size()) throw std::out_of_range("position out of range");
  const int n = sigma.size();
  const int here = sigma(pos);
  int count = 0;
  switch (which) {
    case Vincular2::S31_2:
      for (int j = 2; j < pos; ++j) {
        if (sigma(j) < here && here < sigma(j - 1)) ++count;
      }
      break;
    case Vincular2::S2_31:
      for (int j = pos + 1; j < n; ++j) {
        if (sigma(j + 1) < here && here < sigma(j)) ++count;
      }
      break;
    case Vincular2::S2_13:
      for (int j = pos + 1; j < n; ++j) {
        if (sigma(j) < here && here < sigma(j + 1)) ++count;
      }
      break;
    case Vincular2::S13_2:
      for (int j = 2; j < pos; ++j) {
        if (sigma(j - 1) < here && here < sigma(j)) ++count;
      }
      break;
  }
  return count;
}

int vincular2(const Permutation& sigma, Vincular2 which) {
  int total = 0;
  for (int pos = 1; pos <= sigma.size(); ++pos) total += vincular2_at(sigma, which, pos);
  return total;
}

int vincular2_at_value(const Permutation& sigma, Vincular2 which, int value) {
  if (value < 1 || value > sigma.size()) throw std::out_of_range("value out of range");
  return vincular2_at(sigma, which, sigma.position_of(value));
}

int hat_2_13_at(const Permutation& sigma, int pos) {
  if (pos < 1 || pos > sigma.size()) throw std::out_of_range("position out of range");
  const int n = sigma.size();
  const int here = sigma(pos);
  int count = 0;
  // j = n pairs sigma(n) with the appended letter sigma(n+1) = n+1.
  for (int j = pos + 1; j <= n; ++j) {
    const int next = j == n ? n + 1 : sigma(j + 1);
    if (sigma(j) < here && here < next) ++count;
  }
  return count;
}

int hat_2_13(const Permutation& sigma) {
  int total = 0;
  for (int pos = 1; pos <= sigma.size(); ++pos) total += hat_2_13_at(sigma, pos);
  return total;
}

int hat_2_13_at_value(const Permutation& sigma, int value) {
  if (value < 1 || value > sigma.size()) throw std::out_of_range("value out of range");
  return hat_2_13_at(sigma, sigma.position_of(value));
}

Vincular3Counts vincular3(const Permutation& sigma) {
  const int n = sigma.size();
  Vincular3Counts out;
  for (int i = 1; i + 1 <= n; ++i) {
    const int a = sigma(i);      // plays the "3" or "4"
    const int b = sigma(i + 1);  // plays the "1"
    if (a < b) continue;
    for (int j = i + 2; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        const int x = sigma(j);
        const int y = sigma(k);
        if (b < x && x < a && a < y) ++out.s31_2_4;
        if (b < y && y < a && a < x) ++out.s31_4_2;
        if (b < x && x < y && y < a) ++out.s41_2_3;
        if (b < y && y < x && x < a) ++out.s41_3_2;
      }
    }
  }
  return out;
}

Vincular3Counts vincular3_refined(const Permutation& sigma, int k, int l) {
  const int n = sigma.size();
  if (k < 1 || l > n || k >= l) throw std::invalid_argument("need 1 <= k < l <= n");
  const int pos_k = sigma.position_of(k);
  const int pos_l = sigma.position_of(l);
  Vincular3Counts out;
  for (int i = 2; i <= n; ++i) {
    const int a = sigma(i - 1);
    const int b = sigma(i);
    if (b < k && k < a && a < l) {
      // "2" is the value k, "4" is the value l.
      if (pos_k > i && pos_l > pos_k) ++out.s31_2_4;
      if (pos_l > i && pos_k > pos_l) ++out.s31_4_2;
    }
    if (b < k && l < a) {
      // "2" and "3" are the values k < l in pattern-specific position order.
      if (pos_k > i && pos_l > pos_k) ++out.s41_2_3;
      if (pos_l > i && pos_k > pos_l) ++out.s41_3_2;
    }
  }
  return out;
}

bool contains(const Permutation& sigma, const Permutation& pattern) {
  const int n = sigma.size();
  const int m = pattern.size();
  if (m > n) return false;
  if (m == 0) return true;
  // Backtracking over positions chosen for the pattern letters, pruning with
  // pairwise order consistency against the already chosen letters.
  std::vector<int> chosen;  // positions in sigma for pattern letters 1..depth
  std::function<bool(int, int)> extend = [&](int depth, int from) -> bool {
    if (depth == m) return true;
    for (int pos = from; pos <= n - (m - depth - 1); ++pos) {
      bool ok = true;
      for (int d = 0; d < depth; ++d) {
        const bool sigma_less = sigma(chosen[static_cast<std::size_t>(d)]) < sigma(pos);
        const bool pattern_less = pattern(d + 1) < pattern(depth + 1);
        if (sigma_less != pattern_less) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(pos);
      if (extend(depth + 1, pos + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return extend(0, 1);
}

}  // namespace catalan
