#pragma once

#include <vector>

#include "catalan/permutation.hpp"

namespace catalan {

// Boundary convention for classifying entries of sigma in S_n. The left
// boundary is always sigma(0) = 0; the right boundary sigma(n+1) is the
// chosen sentinel. There is no default: every classification names its
// convention explicitly.
enum class RightBoundary {
  Zero,      // sigma(n+1) = 0
  Infinity,  // sigma(n+1) = +infinity
  NPlusOne,  // sigma(n+1) = n + 1
};

struct Boundary {
  RightBoundary right;
};

inline constexpr Boundary kBoundaryZero{RightBoundary::Zero};
inline constexpr Boundary kBoundaryInfinity{RightBoundary::Infinity};
inline constexpr Boundary kBoundaryNPlusOne{RightBoundary::NPlusOne};

// Class of sigma(i) relative to its neighbours under a boundary convention:
// peak:           sigma(i-1) < sigma(i) > sigma(i+1)
// valley:         sigma(i-1) > sigma(i) < sigma(i+1)
// double ascent:  sigma(i-1) < sigma(i) < sigma(i+1)
// double descent: sigma(i-1) > sigma(i) > sigma(i+1)
enum class ValueClass { Peak, Valley, DoubleAscent, DoubleDescent };

ValueClass classify_value(const Permutation& sigma, int value, Boundary b);
ValueClass classify_position(const Permutation& sigma, int pos, Boundary b);

struct LocalStats {
  int pk = 0, val = 0, da = 0, dd = 0;
  // The values in each class, ascending.
  std::vector<int> peaks, valleys, double_ascents, double_descents;
};

LocalStats local_stats(const Permutation& sigma, Boundary b);

// Number of descents: positions i < n with sigma(i) > sigma(i+1).
int des(const Permutation& sigma);
std::vector<int> descent_positions(const Permutation& sigma);

// Vincular patterns of length 3, where the dash separates the part matched
// contiguously from the free letter. Occurrence counts attached to position i
// playing the role of the dashed letter:
//   (31-2) at i: #{j : 1 < j < i,  sigma(j)   < sigma(i) < sigma(j-1)}
//   (2-31) at i: #{j : i < j < n,  sigma(j+1) < sigma(i) < sigma(j)}
//   (2-13) at i: #{j : i < j < n,  sigma(j)   < sigma(i) < sigma(j+1)}
//   (13-2) at i: #{j : 1 < j < i,  sigma(j-1) < sigma(i) < sigma(j)}
enum class Vincular2 { S31_2, S2_31, S2_13, S13_2 };

int vincular2(const Permutation& sigma, Vincular2 which);
int vincular2_at(const Permutation& sigma, Vincular2 which, int pos);
int vincular2_at_value(const Permutation& sigma, Vincular2 which, int value);

// (2-13) computed as if sigma were extended by sigma(n+1) = n+1, so j may
// run up to n and pair position n with the appended letter.
int hat_2_13(const Permutation& sigma);
int hat_2_13_at(const Permutation& sigma, int pos);
int hat_2_13_at_value(const Permutation& sigma, int value);

// Occurrence counts of the four vincular patterns of length 4 whose first two
// letters are matched contiguously: (31-2-4), (31-4-2), (41-2-3), (41-3-2).
struct Vincular3Counts {
  long long s31_2_4 = 0;
  long long s31_4_2 = 0;
  long long s41_2_3 = 0;
  long long s41_3_2 = 0;
  long long total() const { return s31_2_4 + s31_4_2 + s41_2_3 + s41_3_2; }
  friend bool operator==(const Vincular3Counts& a, const Vincular3Counts& b) {
    return a.s31_2_4 == b.s31_2_4 && a.s31_4_2 == b.s31_4_2 && a.s41_2_3 == b.s41_2_3 &&
           a.s41_3_2 == b.s41_3_2;
  }
};

Vincular3Counts vincular3(const Permutation& sigma);

// Refinement by the values k < l playing the roles of the "2" and "4" letters
// (in pattern-specific order); summing over all pairs k < l recovers
// vincular3. Throws std::invalid_argument unless 1 <= k < l <= n.
Vincular3Counts vincular3_refined(const Permutation& sigma, int k, int l);

// Classical containment: sigma has a (not necessarily contiguous) subsequence
// order-isomorphic to the pattern. A pattern longer than sigma never occurs.
bool contains(const Permutation& sigma, const Permutation& pattern);

}  // namespace catalan
