#pragma once

#include <string>
#include <vector>

#include "catalan/mpoly.hpp"

#include "json.hpp"

namespace catalan {

// Verification suites, one per theorem-level identity:
//   T1_1: three-variable 321-class polynomial vs TypeA continued fraction
//   T1_2: three-variable B4-class polynomial vs TypeB, plus central binomials
//   T1_3: gamma coefficients, fraction route vs orbit-representative route
//   T3_2: five-variable 321 refinement, fraction vs class vs path sum
//   T4_1: six-variable B4 refinement, fraction vs class vs path sum
//   T5_1: full six-variable gamma identity
//   T6_1: five-variable 312 refinement, fraction vs class vs path sum
//   L1_1: contraction of Stieltjes fractions into Jacobi fractions
//   L5_2: vincular class equals classical class
//   MFS:  valley-hopping action property suite
enum class Theorem { T1_1, T1_2, T1_3, T3_2, T4_1, T5_1, T6_1, L1_1, L5_2, MFS };

std::string theorem_name(Theorem theorem);  // "t1.1", ..., "l1.1", "mfs"
Theorem theorem_from_name(const std::string& name);
const std::vector<Theorem>& all_theorems();

// The meaning of nmax per theorem: greatest coefficient order / permutation
// size checked, except L1_1 where it is the number of random trials.
int default_nmax(Theorem theorem);
int theorem_cap(Theorem theorem);

struct CellResult {
  int n = 0;
  std::string label;  // route identifier, stable across runs
  bool pass = false;
  std::string detail;  // diff text on failure, empty on pass
};

struct VerifyReport {
  Theorem theorem = Theorem::T1_1;
  int nmax = 0;
  std::vector<CellResult> cells;
  bool pass = false;
  double wall_ms = 0.0;

  nlohmann::ordered_json to_json() const;
};

// Runs every route of the theorem up to nmax. Cells are computed
// concurrently and assembled in (theorem, n) order; any route exception
// becomes a failing cell. Throws std::invalid_argument when nmax exceeds the
// theorem cap.
VerifyReport verify(Theorem theorem, int nmax);

// Reference tables rendered as CSV rows "n,entry,entry,...":
//   BarC:       q-coefficients of the n-th TypeA coefficient at p=t=1
//   TildeC:     p-coefficients of the n-th TypeA coefficient at q=t=1
//   Bexpansion: gamma polynomials of the n-th three-variable TypeB coefficient
// Rows run from n = 1 to nmax.
enum class TableKind { BarC, TildeC, Bexpansion };

TableKind table_from_name(const std::string& name);  // "barc", "tildec", "bexpansion"
std::vector<std::string> table_rows(TableKind kind, int nmax);

}  // namespace catalan
