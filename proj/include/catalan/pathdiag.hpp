#pragma once

#include <functional>
#include <string>
#include <vector>

#include "catalan/mpoly.hpp"
#include "catalan/permutation.hpp"

namespace catalan {

// Steps of a 2-Motzkin path: up, down, and two coloured level steps (blue and
// red). Enumerator order U < D < Lb < Lr is the canonical generation order.
enum class Step { U = 0, D = 1, Lb = 2, Lr = 3 };

const char* step_name(Step step);

// Lattice path with steps +1 / -1 / 0 / 0 staying nonnegative and ending at
// height 0.
class Motzkin2Path {
 public:
  Motzkin2Path() = default;
  explicit Motzkin2Path(std::vector<Step> steps);
  static Motzkin2Path parse(const std::string& text);  // "U D Lb Lr", space separated

  int length() const { return static_cast<int>(steps_.size()); }
  Step step(int i) const { return steps_[static_cast<std::size_t>(i - 1)]; }  // 1-based
  // Height of the point the i-th step starts from.
  int start_height(int i) const { return heights_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<Step>& steps() const { return steps_; }

  std::string str() const;

  friend bool operator==(const Motzkin2Path& a, const Motzkin2Path& b) {
    return a.steps_ == b.steps_;
  }
  friend bool operator!=(const Motzkin2Path& a, const Motzkin2Path& b) { return !(a == b); }
  friend bool operator<(const Motzkin2Path& a, const Motzkin2Path& b) {
    return a.steps_ < b.steps_;
  }

 private:
  std::vector<Step> steps_;
  std::vector<int> heights_;  // start height per step
};

// 2-Motzkin path with one integer label per step. With h the step's start
// height, labels satisfy 0 <= p_i <= h for U and Lb steps always, and for D
// and Lr steps 0 <= p_i <= h in the unrestricted case but 0 <= p_i <= h-1 in
// the restricted case.
struct LaguerreHistory {
  Motzkin2Path path;
  std::vector<int> labels;
  bool restricted = false;

  LaguerreHistory(Motzkin2Path path, std::vector<int> labels, bool restricted);

  friend bool operator==(const LaguerreHistory& a, const LaguerreHistory& b) {
    return a.restricted == b.restricted && a.path == b.path && a.labels == b.labels;
  }
  friend bool operator!=(const LaguerreHistory& a, const LaguerreHistory& b) { return !(a == b); }
};

// Annotated paths carrying the class-specific annotation rules. With h the
// start height of the step:
//
// Type A (image of the 321 class): no Lr steps at all; height-0 steps are U
// or Lb only; xi(U) = 0, xi(D) = h - 1, xi(Lb) in {0, h}.
//
// Type B (image of the 3124/4123/3142/4132 class): xi(D at h == 1) in {0, 1};
// xi = h for every other step.
//
// Type C (image of the 312 class): xi = h for every step.
struct PathDiagramA {
  Motzkin2Path path;
  std::vector<int> xi;
  PathDiagramA(Motzkin2Path path, std::vector<int> xi);
  friend bool operator==(const PathDiagramA& a, const PathDiagramA& b) {
    return a.path == b.path && a.xi == b.xi;
  }
};

struct PathDiagramB {
  Motzkin2Path path;
  std::vector<int> xi;
  PathDiagramB(Motzkin2Path path, std::vector<int> xi);
  friend bool operator==(const PathDiagramB& a, const PathDiagramB& b) {
    return a.path == b.path && a.xi == b.xi;
  }
};

struct PathDiagramC {
  Motzkin2Path path;
  std::vector<int> xi;
  PathDiagramC(Motzkin2Path path, std::vector<int> xi);
  friend bool operator==(const PathDiagramC& a, const PathDiagramC& b) {
    return a.path == b.path && a.xi == b.xi;
  }
};

// Francon-Viennot correspondence. Step i records how the value i sits between
// its neighbours under the (0,0) boundary: valley -> U, peak -> D, double
// ascent -> Lb, double descent -> Lr; the label is the (2-13) count at the
// position of i. Bijection from S_{n+1} onto unrestricted histories of
// length n (the value n+1 carries no step).
LaguerreHistory psi_fv(const Permutation& sigma);
Permutation psi_fv_inv(const LaguerreHistory& history);

// Restricted variant on S_n: classifications use the (0, infinity) boundary,
// the label is the (2-31) count at the position of i. Bijection from S_n onto
// restricted histories of length n.
LaguerreHistory phi_fv(const Permutation& sigma);
Permutation phi_fv_inv(const LaguerreHistory& history);

// Weight-preserving restrictions to the pattern classes:
//   phi1: S_n(321)                  -> type A diagrams of length n
//   phi2: S_{n+1}(3124,4123,3142,4132) -> type B diagrams of length n
//   phi3: S_{n+1}(312)              -> type C diagrams of length n
// Each throws std::invalid_argument when sigma lies outside the class.
PathDiagramA phi1(const Permutation& sigma);
Permutation phi1_inv(const PathDiagramA& diagram);
PathDiagramB phi2(const Permutation& sigma);
Permutation phi2_inv(const PathDiagramB& diagram);
PathDiagramC phi3(const Permutation& sigma);
Permutation phi3_inv(const PathDiagramC& diagram);

// Step weights (h = start height, xi = annotation):
//   Type A: U: q^h w | D: p^h t        | Lb: p^xi q^(h-xi) u
//   Type B: U: p^xi w t | D: p^xi q^(h-xi) | Lb: p^xi u | Lr: p^xi v t
//   Type C: U: q^xi w   | D: q^xi t        | Lb: q^xi u | Lr: q^xi v t
// The weight of a diagram is the product over its steps; the empty diagram
// has weight 1.
MPoly weight(const PathDiagramA& diagram);
MPoly weight(const PathDiagramB& diagram);
MPoly weight(const PathDiagramC& diagram);

enum class DiagramType { A, B, C };

// Exhaustive generation of all diagrams of the given length, paths in
// lexicographic step order (U < D < Lb < Lr) and annotation vectors in
// lexicographic order within a path.
void for_each_diagram_a(int n, const std::function<void(const PathDiagramA&)>& sink);
void for_each_diagram_b(int n, const std::function<void(const PathDiagramB&)>& sink);
void for_each_diagram_c(int n, const std::function<void(const PathDiagramC&)>& sink);

// Enumeration of Laguerre histories of length n (all 2-Motzkin paths with all
// admissible labels).
void for_each_history(int n, bool restricted, const std::function<void(const LaguerreHistory&)>& sink);

// Sum of weight over every diagram of the given length, by exhaustive
// generation. Equals the corresponding continued fraction Taylor coefficient.
// Throws std::runtime_error when n exceeds the path-sum cap.
MPoly path_sum(int n, DiagramType type);

}  // namespace catalan
