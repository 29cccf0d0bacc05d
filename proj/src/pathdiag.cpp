#include "catalan/pathdiag.hpp"

#include <sstream>
#include <stdexcept>

#include "catalan/config.hpp"
#include "catalan/insertion.hpp"
#include "catalan/patternclass.hpp"
#include "catalan/permstats.hpp"

namespace catalan {

namespace {

int height_delta(Step step) {
  switch (step) {
    case Step::U: return 1;
    case Step::D: return -1;
    case Step::Lb:
    case Step::Lr: return 0;
  }
  return 0;
}

LetterKind step_letter(Step step) {
  switch (step) {
    case Step::U: return LetterKind::m;
    case Step::D: return LetterKind::f;
    case Step::Lb: return LetterKind::l;
    case Step::Lr: return LetterKind::r;
  }
  throw std::invalid_argument("unknown step");
}

Step classify_step(ValueClass c) {
  switch (c) {
    case ValueClass::Valley: return Step::U;
    case ValueClass::Peak: return Step::D;
    case ValueClass::DoubleAscent: return Step::Lb;
    case ValueClass::DoubleDescent: return Step::Lr;
  }
  throw std::invalid_argument("unknown value class");
}

}  // namespace

const char* step_name(Step step) {
  switch (step) {
    case Step::U: return "U";
    case Step::D: return "D";
    case Step::Lb: return "Lb";
    case Step::Lr: return "Lr";
  }
  throw std::invalid_argument("unknown step");
}

Motzkin2Path::Motzkin2Path(std::vector<Step> steps) : steps_(std::move(steps)) {
  heights_.reserve(steps_.size());
  int h = 0;
  for (Step step : steps_) {
    heights_.push_back(h);
    h += height_delta(step);
    if (h < 0) throw std::invalid_argument("path dips below height 0");
  }
  if (h != 0) throw std::invalid_argument("path must end at height 0");
}

Motzkin2Path Motzkin2Path::parse(const std::string& text) {
  std::vector<Step> steps;
  std::istringstream is(text);
  std::string token;
  while (is >> token) {
    if (token == "U") steps.push_back(Step::U);
    else if (token == "D") steps.push_back(Step::D);
    else if (token == "Lb") steps.push_back(Step::Lb);
    else if (token == "Lr") steps.push_back(Step::Lr);
    else throw std::invalid_argument("unknown step token '" + token + "'");
  }
  return Motzkin2Path(std::move(steps));
}

std::string Motzkin2Path::str() const {
  std::string out;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i > 0) out += ' ';
    out += step_name(steps_[i]);
  }
  return out;
}

LaguerreHistory::LaguerreHistory(Motzkin2Path path_in, std::vector<int> labels_in, bool restricted_in)
    : path(std::move(path_in)), labels(std::move(labels_in)), restricted(restricted_in) {
  if (labels.size() != static_cast<std::size_t>(path.length())) {
    throw std::invalid_argument("history needs one label per step");
  }
  for (int i = 1; i <= path.length(); ++i) {
    const int h = path.start_height(i);
    const Step step = path.step(i);
    int bound = h;
    if (restricted && (step == Step::D || step == Step::Lr)) bound = h - 1;
    const int label = labels[static_cast<std::size_t>(i - 1)];
    if (label < 0 || label > bound) {
      throw std::invalid_argument("label " + std::to_string(label) + " at step " +
                                  std::to_string(i) + " out of range [0," + std::to_string(bound) + "]");
    }
  }
}

namespace {

void check_diagram_a(const Motzkin2Path& path, const std::vector<int>& xi) {
  if (xi.size() != static_cast<std::size_t>(path.length())) {
    throw std::invalid_argument("diagram needs one annotation per step");
  }
  for (int i = 1; i <= path.length(); ++i) {
    const int h = path.start_height(i);
    const int x = xi[static_cast<std::size_t>(i - 1)];
    switch (path.step(i)) {
      case Step::Lr:
        throw std::invalid_argument("type A diagrams have no Lr steps");
      case Step::U:
        if (x != 0) throw std::invalid_argument("type A: xi(U) must be 0");
        break;
      case Step::D:
        if (x != h - 1) throw std::invalid_argument("type A: xi(D) must be start height - 1");
        break;
      case Step::Lb:
        if (x != 0 && x != h) throw std::invalid_argument("type A: xi(Lb) must be 0 or the start height");
        break;
    }
  }
}

void check_diagram_b(const Motzkin2Path& path, const std::vector<int>& xi) {
  if (xi.size() != static_cast<std::size_t>(path.length())) {
    throw std::invalid_argument("diagram needs one annotation per step");
  }
  for (int i = 1; i <= path.length(); ++i) {
    const int h = path.start_height(i);
    const int x = xi[static_cast<std::size_t>(i - 1)];
    if (path.step(i) == Step::D && h == 1) {
      if (x != 0 && x != 1) throw std::invalid_argument("type B: xi(D at height 1) must be 0 or 1");
    } else if (x != h) {
      throw std::invalid_argument("type B: xi must equal the start height");
    }
  }
}

void check_diagram_c(const Motzkin2Path& path, const std::vector<int>& xi) {
  if (xi.size() != static_cast<std::size_t>(path.length())) {
    throw std::invalid_argument("diagram needs one annotation per step");
  }
  for (int i = 1; i <= path.length(); ++i) {
    if (xi[static_cast<std::size_t>(i - 1)] != path.start_height(i)) {
      throw std::invalid_argument("type C: xi must equal the start height");
    }
  }
}

}  // namespace

PathDiagramA::PathDiagramA(Motzkin2Path path_in, std::vector<int> xi_in)
    : path(std::move(path_in)), xi(std::move(xi_in)) {
  check_diagram_a(path, xi);
}

PathDiagramB::PathDiagramB(Motzkin2Path path_in, std::vector<int> xi_in)
    : path(std::move(path_in)), xi(std::move(xi_in)) {
  check_diagram_b(path, xi);
}

PathDiagramC::PathDiagramC(Motzkin2Path path_in, std::vector<int> xi_in)
    : path(std::move(path_in)), xi(std::move(xi_in)) {
  check_diagram_c(path, xi);
}

LaguerreHistory psi_fv(const Permutation& sigma) {
  const int n = sigma.size() - 1;
  if (n < 0) throw std::invalid_argument("psi needs a nonempty permutation");
  std::vector<Step> steps;
  std::vector<int> labels;
  steps.reserve(static_cast<std::size_t>(n));
  labels.reserve(static_cast<std::size_t>(n));
  for (int value = 1; value <= n; ++value) {
    steps.push_back(classify_step(classify_value(sigma, value, kBoundaryZero)));
    labels.push_back(vincular2_at_value(sigma, Vincular2::S2_13, value));
  }
  return LaguerreHistory(Motzkin2Path(std::move(steps)), std::move(labels), false);
}

Permutation psi_fv_inv(const LaguerreHistory& history) {
  if (history.restricted) throw std::invalid_argument("psi inverse expects an unrestricted history");
  ReplayState replay(ReplayMode::Standard);
  for (int i = 1; i <= history.path.length(); ++i) {
    replay.apply_from_right(step_letter(history.path.step(i)),
                            history.labels[static_cast<std::size_t>(i - 1)]);
  }
  // One slot remains; the maximum n+1 fills it.
  replay.apply(Letter{LetterKind::f, 1});
  return replay.finish();
}

LaguerreHistory phi_fv(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<Step> steps;
  std::vector<int> labels;
  steps.reserve(static_cast<std::size_t>(n));
  labels.reserve(static_cast<std::size_t>(n));
  for (int value = 1; value <= n; ++value) {
    steps.push_back(classify_step(classify_value(sigma, value, kBoundaryInfinity)));
    labels.push_back(vincular2_at_value(sigma, Vincular2::S2_31, value));
  }
  return LaguerreHistory(Motzkin2Path(std::move(steps)), std::move(labels), true);
}

Permutation phi_fv_inv(const LaguerreHistory& history) {
  if (!history.restricted) throw std::invalid_argument("phi inverse expects a restricted history");
  ReplayState replay(ReplayMode::KeepTrailingSlot);
  for (int i = 1; i <= history.path.length(); ++i) {
    replay.apply_from_right(step_letter(history.path.step(i)),
                            history.labels[static_cast<std::size_t>(i - 1)]);
  }
  return replay.finish();
}

PathDiagramA phi1(const Permutation& sigma) {
  if (!class_member(sigma, PatternClassId::A321)) {
    throw std::invalid_argument("permutation contains 321");
  }
  LaguerreHistory h = phi_fv(sigma);
  return PathDiagramA(std::move(h.path), std::move(h.labels));
}

Permutation phi1_inv(const PathDiagramA& diagram) {
  return phi_fv_inv(LaguerreHistory(diagram.path, diagram.xi, true));
}

PathDiagramB phi2(const Permutation& sigma) {
  if (!class_member(sigma, PatternClassId::B4)) {
    throw std::invalid_argument("permutation contains one of 3124, 4123, 3142, 4132");
  }
  LaguerreHistory h = psi_fv(sigma);
  return PathDiagramB(std::move(h.path), std::move(h.labels));
}

Permutation phi2_inv(const PathDiagramB& diagram) {
  return psi_fv_inv(LaguerreHistory(diagram.path, diagram.xi, false));
}

PathDiagramC phi3(const Permutation& sigma) {
  if (!class_member(sigma, PatternClassId::A312)) {
    throw std::invalid_argument("permutation contains 312");
  }
  LaguerreHistory h = psi_fv(sigma);
  return PathDiagramC(std::move(h.path), std::move(h.labels));
}

Permutation phi3_inv(const PathDiagramC& diagram) {
  return psi_fv_inv(LaguerreHistory(diagram.path, diagram.xi, false));
}

MPoly weight(const PathDiagramA& diagram) {
  MPoly out(1);
  for (int i = 1; i <= diagram.path.length(); ++i) {
    const auto h = static_cast<std::uint32_t>(diagram.path.start_height(i));
    const auto x = static_cast<std::uint32_t>(diagram.xi[static_cast<std::size_t>(i - 1)]);
    switch (diagram.path.step(i)) {
      case Step::U:
        out *= MPoly::variable(Var::q, h) * var_w();
        break;
      case Step::D:
        out *= MPoly::variable(Var::p, h) * var_t();
        break;
      case Step::Lb:
        out *= MPoly::variable(Var::p, x) * MPoly::variable(Var::q, h - x) * var_u();
        break;
      case Step::Lr:
        throw std::logic_error("type A diagram with Lr step");
    }
  }
  return out;
}

MPoly weight(const PathDiagramB& diagram) {
  MPoly out(1);
  for (int i = 1; i <= diagram.path.length(); ++i) {
    const auto h = static_cast<std::uint32_t>(diagram.path.start_height(i));
    const auto x = static_cast<std::uint32_t>(diagram.xi[static_cast<std::size_t>(i - 1)]);
    const MPoly px = MPoly::variable(Var::p, x);
    switch (diagram.path.step(i)) {
      case Step::U:
        out *= px * var_w() * var_t();
        break;
      case Step::D:
        out *= px * MPoly::variable(Var::q, h - x);
        break;
      case Step::Lb:
        out *= px * var_u();
        break;
      case Step::Lr:
        out *= px * var_v() * var_t();
        break;
    }
  }
  return out;
}

MPoly weight(const PathDiagramC& diagram) {
  MPoly out(1);
  for (int i = 1; i <= diagram.path.length(); ++i) {
    const auto x = static_cast<std::uint32_t>(diagram.xi[static_cast<std::size_t>(i - 1)]);
    const MPoly qx = MPoly::variable(Var::q, x);
    switch (diagram.path.step(i)) {
      case Step::U:
        out *= qx * var_w();
        break;
      case Step::D:
        out *= qx * var_t();
        break;
      case Step::Lb:
        out *= qx * var_u();
        break;
      case Step::Lr:
        out *= qx * var_v() * var_t();
        break;
    }
  }
  return out;
}

namespace {

// Enumerates 2-Motzkin paths of length n in lexicographic step order, with a
// per-type step filter, then annotation vectors in lexicographic order.
template <typename Check, typename Sink>
void enumerate_paths(int n, bool allow_lr, Check&& annotate, Sink&& sink) {
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(n));
  std::function<void(int, int)> walk = [&](int h, int remaining) {
    if (remaining == 0) {
      if (h == 0) annotate(Motzkin2Path(steps), sink);
      return;
    }
    if (h > remaining) return;  // cannot come back down in time
    for (Step step : {Step::U, Step::D, Step::Lb, Step::Lr}) {
      if (step == Step::Lr && !allow_lr) continue;
      if (step == Step::D && h == 0) continue;
      steps.push_back(step);
      walk(h + height_delta(step), remaining - 1);
      steps.pop_back();
    }
  };
  walk(0, n);
}

// Annotation choice sets per step, smallest first.
std::vector<int> xi_choices_a(Step step, int h) {
  switch (step) {
    case Step::U: return {0};
    case Step::D: return {h - 1};
    case Step::Lb: return h >= 1 ? std::vector<int>{0, h} : std::vector<int>{0};
    case Step::Lr: break;
  }
  throw std::logic_error("type A diagram with Lr step");
}

std::vector<int> xi_choices_b(Step step, int h) {
  if (step == Step::D && h == 1) return {0, 1};
  return {h};
}

std::vector<int> xi_choices_c(Step, int h) { return {h}; }

template <typename Choices, typename Emit>
void annotate_path(const Motzkin2Path& path, Choices&& choices, Emit&& emit) {
  std::vector<int> xi;
  xi.reserve(static_cast<std::size_t>(path.length()));
  std::function<void(int)> walk = [&](int i) {
    if (i > path.length()) {
      emit(xi);
      return;
    }
    for (int choice : choices(path.step(i), path.start_height(i))) {
      xi.push_back(choice);
      walk(i + 1);
      xi.pop_back();
    }
  };
  walk(1);
}

void check_pathsum_cap(int n) {
  if (n > config::pathsum_cap()) {
    throw std::runtime_error("path enumeration for n=" + std::to_string(n) + " exceeds cap " +
                             std::to_string(config::pathsum_cap()));
  }
}

}  // namespace

void for_each_diagram_a(int n, const std::function<void(const PathDiagramA&)>& sink) {
  check_pathsum_cap(n);
  enumerate_paths(
      n, /*allow_lr=*/false,
      [](const Motzkin2Path& path, const std::function<void(const PathDiagramA&)>& emit) {
        annotate_path(path, xi_choices_a,
                      [&](const std::vector<int>& xi) { emit(PathDiagramA(path, xi)); });
      },
      sink);
}

void for_each_diagram_b(int n, const std::function<void(const PathDiagramB&)>& sink) {
  check_pathsum_cap(n);
  enumerate_paths(
      n, /*allow_lr=*/true,
      [](const Motzkin2Path& path, const std::function<void(const PathDiagramB&)>& emit) {
        annotate_path(path, xi_choices_b,
                      [&](const std::vector<int>& xi) { emit(PathDiagramB(path, xi)); });
      },
      sink);
}

void for_each_diagram_c(int n, const std::function<void(const PathDiagramC&)>& sink) {
  check_pathsum_cap(n);
  enumerate_paths(
      n, /*allow_lr=*/true,
      [](const Motzkin2Path& path, const std::function<void(const PathDiagramC&)>& emit) {
        annotate_path(path, xi_choices_c,
                      [&](const std::vector<int>& xi) { emit(PathDiagramC(path, xi)); });
      },
      sink);
}

void for_each_history(int n, bool restricted,
                      const std::function<void(const LaguerreHistory&)>& sink) {
  check_pathsum_cap(n);
  const auto choices = [restricted](Step step, int h) {
    int bound = h;
    if (restricted && (step == Step::D || step == Step::Lr)) bound = h - 1;
    std::vector<int> out;
    for (int x = 0; x <= bound; ++x) out.push_back(x);
    return out;
  };
  enumerate_paths(
      n, /*allow_lr=*/true,
      [&](const Motzkin2Path& path, const std::function<void(const LaguerreHistory&)>& emit) {
        annotate_path(path, choices, [&](const std::vector<int>& labels) {
          emit(LaguerreHistory(path, labels, restricted));
        });
      },
      sink);
}

MPoly path_sum(int n, DiagramType type) {
  MPoly sum;
  switch (type) {
    case DiagramType::A:
      for_each_diagram_a(n, [&sum](const PathDiagramA& d) { sum += weight(d); });
      return sum;
    case DiagramType::B:
      for_each_diagram_b(n, [&sum](const PathDiagramB& d) { sum += weight(d); });
      return sum;
    case DiagramType::C:
      for_each_diagram_c(n, [&sum](const PathDiagramC& d) { sum += weight(d); });
      return sum;
  }
  throw std::invalid_argument("unknown diagram type");
}

}  // namespace catalan
