#pragma once

#include <functional>
#include <string>
#include <vector>

#include "catalan/insertion.hpp"
#include "catalan/mpoly.hpp"
#include "catalan/permstats.hpp"
#include "catalan/permutation.hpp"

namespace catalan {

// The three pattern-avoidance classes with regular insertion languages:
//   A321: permutations avoiding 321          (counted by Catalan numbers)
//   A312: permutations avoiding 312          (counted by Catalan numbers)
//   B4:   permutations avoiding 3124, 4123, 3142, 4132
//         (counted by central binomials binom(2(n-1), n-1))
enum class PatternClassId { A321, A312, B4 };

const std::vector<Permutation>& class_patterns(PatternClassId id);
std::string class_name(PatternClassId id);
PatternClassId class_from_name(const std::string& name);

// Membership by classical pattern containment.
bool class_member(const Permutation& sigma, PatternClassId id);

// Streams the members of S_n avoiding the class patterns, generated by
// walking the class's insertion grammar depth-first. Letters are tried in
// ascending (kind, slot) order with kinds ordered f < l < m < r and slot
// indices compared as integers, so words arrive in lexicographic order.
// A312 and B4 use standard replay with letter sets
//   A312: f1, l1, m1, r1
//   B4:   f1, l1, m1, r1, plus f2 exactly when two slots are open
// and A321 uses keep-trailing-slot replay with
//   one open slot:  l-1, m-1
//   more:           f1, l1, l-1, m-1.
void generate_class(int n, PatternClassId id,
                    const std::function<void(const Permutation&, const InsertionWord&)>& sink);
std::vector<Permutation> generate_class(int n, PatternClassId id);

// Filters all of S_n by containment, the oracle the grammars are checked
// against. Throws std::runtime_error when n exceeds the brute-force cap.
std::vector<Permutation> perms_avoiding_bruteforce(int n, const std::vector<Permutation>& patterns);

// Generating polynomials over the classes, one permutation = one monomial:
//   A321 of degree n, over sigma in S_n(321):
//     p^(2-13 hatted) q^(31-2) t^des u^da v^0 w^val
//     with da and val classified under the (0, infinity) boundary;
//   B4 of degree n, over sigma in S_{n+1}(3124, 4123, 3142, 4132):
//     p^(2-13) q^(31-2) t^des u^da v^dd w^val under the (0, 0) boundary;
//   A312 of degree n, over sigma in S_{n+1}(312):
//     q^(2-13) t^des u^da v^dd w^val under the (0, 0) boundary.
// These are exactly the Taylor coefficients of the TypeA / TypeB / TypeC
// continued fractions.
MPoly class_polynomial(int n, PatternClassId id);

}  // namespace catalan
