#include "catalan/verify.hpp"

#include <chrono>
#include <future>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "catalan/contfrac.hpp"
#include "catalan/gamma.hpp"
#include "catalan/pathdiag.hpp"
#include "catalan/patternclass.hpp"
#include "catalan/permstats.hpp"

namespace catalan {

namespace {

struct TheoremInfo {
  Theorem theorem;
  const char* name;
  int default_nmax;
  int cap;
};

constexpr TheoremInfo kTheorems[] = {
    {Theorem::T1_1, "t1.1", 9, 10},  {Theorem::T1_2, "t1.2", 7, 9},
    {Theorem::T1_3, "t1.3", 7, 8},   {Theorem::T3_2, "t3.2", 9, 10},
    {Theorem::T4_1, "t4.1", 7, 8},   {Theorem::T5_1, "t5.1", 6, 7},
    {Theorem::T6_1, "t6.1", 8, 9},   {Theorem::L1_1, "l1.1", 50, 500},
    {Theorem::L5_2, "l5.2", 9, 10},  {Theorem::MFS, "mfs", 7, 8},
};

const TheoremInfo& info(Theorem theorem) {
  for (const TheoremInfo& entry : kTheorems) {
    if (entry.theorem == theorem) return entry;
  }
  throw std::invalid_argument("unknown theorem");
}

CellResult cell_eq(int n, const std::string& label, const MPoly& got, const MPoly& want) {
  CellResult cell{n, label, got == want, ""};
  if (!cell.pass) cell.detail = "got " + got.str() + ", want " + want.str();
  return cell;
}

CellResult cell_check(int n, const std::string& label, bool pass, const std::string& detail) {
  return CellResult{n, label, pass, pass ? "" : detail};
}

// Runs one worker per n concurrently; assembly stays ordered by n. Worker
// exceptions become failing cells instead of crashing the report.
std::vector<CellResult> run_cells(
    int lo, int hi, const std::function<std::vector<CellResult>(int)>& worker) {
  std::vector<std::future<std::vector<CellResult>>> futures;
  for (int n = lo; n <= hi; ++n) {
    futures.push_back(std::async(std::launch::async, [n, &worker]() -> std::vector<CellResult> {
      try {
        return worker(n);
      } catch (const std::exception& e) {
        return {CellResult{n, "exception", false, e.what()}};
      }
    }));
  }
  std::vector<CellResult> out;
  for (auto& future : futures) {
    for (CellResult& cell : future.get()) out.push_back(std::move(cell));
  }
  return out;
}

MPoly set_ones(MPoly poly, std::initializer_list<Var> vars) {
  for (Var var : vars) poly = poly.substitute(var, MPoly(1));
  return poly;
}

BigInt central_binomial(int n) {
  BigInt out = 1;
  for (int i = 1; i <= n; ++i) {
    out *= (n + i);
    out /= i;
  }
  return out;
}

std::vector<CellResult> verify_t1_1(int nmax) {
  const Series series =
      jfraction_series(specialize(named_cf(CfType::TypeA), {{Var::u, 1}, {Var::w, 1}}), nmax);
  return run_cells(0, nmax, [&series](int n) -> std::vector<CellResult> {
    const MPoly enumerated =
        set_ones(class_polynomial(n, PatternClassId::A321), {Var::u, Var::w});
    return {cell_eq(n, "cf-vs-class", series.coeff(n), enumerated)};
  });
}

std::vector<CellResult> verify_t3_2(int nmax) {
  const Series series = jfraction_series(named_cf(CfType::TypeA), nmax);
  return run_cells(0, nmax, [&series](int n) -> std::vector<CellResult> {
    std::vector<CellResult> cells;
    cells.push_back(
        cell_eq(n, "cf-vs-class", series.coeff(n), class_polynomial(n, PatternClassId::A321)));
    cells.push_back(cell_eq(n, "pathsum-vs-cf", path_sum(n, DiagramType::A), series.coeff(n)));
    return cells;
  });
}

std::vector<CellResult> verify_t1_2(int nmax) {
  const JFraction three_var =
      specialize(named_cf(CfType::TypeB), {{Var::u, 1}, {Var::v, 1}, {Var::w, 1}});
  const Series series = jfraction_series(three_var, nmax);
  std::vector<CellResult> cells = run_cells(0, nmax, [&series](int n) -> std::vector<CellResult> {
    const MPoly enumerated =
        set_ones(class_polynomial(n, PatternClassId::B4), {Var::u, Var::v, Var::w});
    return {cell_eq(n, "cf-vs-class", series.coeff(n), enumerated)};
  });
  // Central binomial route at all-ones, always up to at least 10.
  const int binom_max = std::max(nmax, 10);
  const Series all_ones = jfraction_series(
      specialize(three_var, {{Var::p, 1}, {Var::q, 1}, {Var::t, 1}}), binom_max);
  for (int n = 0; n <= binom_max; ++n) {
    const MPoly got = all_ones.coeff(n);
    const MPoly want = MPoly(central_binomial(n));
    cells.push_back(cell_eq(n, "all-ones-binomial", got, want));
  }
  return cells;
}

std::vector<CellResult> verify_t4_1(int nmax) {
  const Series series = jfraction_series(named_cf(CfType::TypeB), nmax);
  return run_cells(0, nmax, [&series](int n) -> std::vector<CellResult> {
    std::vector<CellResult> cells;
    cells.push_back(
        cell_eq(n, "cf-vs-class", series.coeff(n), class_polynomial(n, PatternClassId::B4)));
    cells.push_back(cell_eq(n, "pathsum-vs-cf", path_sum(n, DiagramType::B), series.coeff(n)));
    return cells;
  });
}

std::vector<CellResult> verify_t6_1(int nmax) {
  const Series series = jfraction_series(named_cf(CfType::TypeC), nmax);
  return run_cells(0, nmax, [&series](int n) -> std::vector<CellResult> {
    std::vector<CellResult> cells;
    cells.push_back(
        cell_eq(n, "cf-vs-class", series.coeff(n), class_polynomial(n, PatternClassId::A312)));
    cells.push_back(cell_eq(n, "pathsum-vs-cf", path_sum(n, DiagramType::C), series.coeff(n)));
    return cells;
  });
}

std::vector<CellResult> verify_t1_3(int nmax) {
  const Series series = jfraction_series(
      specialize(named_cf(CfType::TypeB), {{Var::u, 1}, {Var::v, 1}, {Var::w, 1}}), nmax);
  return run_cells(1, nmax, [&series](int n) -> std::vector<CellResult> {
    const GammaExpansion expansion = gamma_decompose(series.coeff(n));
    if (expansion.center2 != n) {
      return {CellResult{n, "gamma-two-route", false,
                         "center " + std::to_string(expansion.center2) + ", want " +
                             std::to_string(n)}};
    }
    for (int k = 0; 2 * k <= n; ++k) {
      const MPoly via_perms = gamma_via_perms(n + 1, k);
      const MPoly& via_cf = expansion.gammas[static_cast<std::size_t>(k)];
      if (via_cf != via_perms) {
        return {CellResult{n, "gamma-two-route", false,
                           "k=" + std::to_string(k) + ": cf route " + via_cf.str() +
                               ", orbit route " + via_perms.str()}};
      }
    }
    return {cell_check(n, "gamma-two-route", true, "")};
  });
}

std::vector<CellResult> verify_t5_1(int nmax) {
  return run_cells(1, nmax, [](int n) -> std::vector<CellResult> {
    return {cell_check(n, "six-variable-identity", full_gamma_identity_check(n),
                       "identity failed")};
  });
}

std::vector<CellResult> verify_l1_1(int trials) {
  std::vector<CellResult> cells;
  const int order = 16;

  // c == 1 contracts onto the Catalan fraction b0=1, b=2, lam=1.
  {
    SFraction ones;
    ones.c = [](int) { return MPoly(1); };
    const JFraction contracted = contract(ones);
    bool shapes = contracted.b(0) == MPoly(1) && contracted.lam(1) == MPoly(1);
    for (int k = 1; k <= 10 && shapes; ++k) {
      shapes = contracted.b(k) == MPoly(2) && contracted.lam(k) == MPoly(1);
    }
    const bool series_match =
        sfraction_series(ones, order) == jfraction_series(contracted, order);
    cells.push_back(cell_check(0, "c-equals-1", shapes && series_match,
                               "contraction of the all-ones fraction is off"));
  }

  // The two q-Catalan Stieltjes fractions against the specialized TypeA
  // fraction: q-powers on odd levels leave q free, on even levels leave the
  // p-marked statistic free.
  {
    const int qorder = 12;
    const Series bar = sfraction_series(qcatalan_bar_sfraction(), qorder);
    const Series bar_j = jfraction_series(contract(qcatalan_bar_sfraction()), qorder);
    const Series type_a_q = jfraction_series(
        specialize(named_cf(CfType::TypeA), {{Var::p, 1}, {Var::t, 1}, {Var::u, 1}, {Var::w, 1}}),
        qorder);
    cells.push_back(cell_check(0, "qcatalan-bar",
                               bar == bar_j && bar == type_a_q,
                               "bar fraction disagrees with the contracted or TypeA route"));

    const Series tilde = sfraction_series(qcatalan_tilde_sfraction(), qorder);
    const Series tilde_j = jfraction_series(contract(qcatalan_tilde_sfraction()), qorder);
    const Series type_a_p = jfraction_series(
        specialize(named_cf(CfType::TypeA), {{Var::q, 1}, {Var::t, 1}, {Var::u, 1}, {Var::w, 1}}),
        qorder);
    bool tilde_ok = tilde == tilde_j;
    for (int n = 0; n <= qorder && tilde_ok; ++n) {
      tilde_ok = tilde.coeff(n) == type_a_p.coeff(n).substitute(Var::p, var_q());
    }
    cells.push_back(cell_check(0, "qcatalan-tilde", tilde_ok,
                               "tilde fraction disagrees with the contracted or TypeA route"));
  }

  // Random integer fractions, fixed seed for reproducible reports.
  std::mt19937 rng(20250815u);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int trial = 1; trial <= trials; ++trial) {
    std::vector<long long> cs(static_cast<std::size_t>(order) + 2);
    for (auto& c : cs) c = dist(rng);
    SFraction random_cf;
    random_cf.c = [cs](int k) { return MPoly(cs[static_cast<std::size_t>(k - 1)]); };
    const bool pass =
        sfraction_series(random_cf, order) == jfraction_series(contract(random_cf), order);
    std::ostringstream os;
    if (!pass) {
      os << "coefficients";
      for (long long c : cs) os << ' ' << c;
    }
    cells.push_back(cell_check(trial, "random-integer", pass, os.str()));
  }
  return cells;
}

std::vector<CellResult> verify_l5_2(int nmax) {
  return run_cells(0, nmax, [](int n) -> std::vector<CellResult> {
    std::string first_mismatch;
    long long mismatches = 0;
    for_each_permutation(n, [&](const Permutation& sigma) {
      const bool vincular_free = vincular3(sigma).total() == 0;
      const bool classical_free = class_member(sigma, PatternClassId::B4);
      if (vincular_free != classical_free) {
        if (mismatches == 0) first_mismatch = sigma.str();
        ++mismatches;
      }
    });
    return {cell_check(n, "class-equality", mismatches == 0,
                       "first mismatch at " + first_mismatch)};
  });
}

std::vector<CellResult> verify_mfs(int nmax) {
  std::vector<CellResult> cells = run_cells(1, nmax, [](int n) -> std::vector<CellResult> {
    std::vector<CellResult> out;
    bool involution = true, cochange = true, closure = true, invariance = true;
    std::string detail;
    for_each_permutation(n, [&](const Permutation& sigma) {
      const Vincular3Counts base_counts = vincular3(sigma);
      const LocalStats base_stats = local_stats(sigma, kBoundaryZero);
      const int base_2_13 = vincular2(sigma, Vincular2::S2_13);
      const int base_31_2 = vincular2(sigma, Vincular2::S31_2);
      const bool base_member = class_member(sigma, PatternClassId::B4);
      for (int x = 1; x <= n; ++x) {
        const Permutation hopped = phi_prime_x(sigma, x);
        if (phi_prime_x(hopped, x) != sigma) {
          involution = false;
          detail = "involution fails at " + sigma.str() + ", x=" + std::to_string(x);
        }
        const LocalStats hopped_stats = local_stats(hopped, kBoundaryZero);
        if (hopped_stats.pk != base_stats.pk || hopped_stats.val != base_stats.val ||
            vincular3(hopped).total() != base_counts.total() ||
            vincular2(hopped, Vincular2::S2_13) != base_2_13 ||
            vincular2(hopped, Vincular2::S31_2) != base_31_2) {
          invariance = false;
          detail = "invariance fails at " + sigma.str() + ", x=" + std::to_string(x);
        }
        if (base_member && !class_member(hopped, PatternClassId::B4)) {
          closure = false;
          detail = "class closure fails at " + sigma.str() + ", x=" + std::to_string(x);
        }
        if (classify_value(sigma, x, kBoundaryZero) == ValueClass::DoubleAscent) {
          const bool ok = des(hopped) == des(sigma) + 1 &&
                          hopped_stats.dd == base_stats.dd + 1 &&
                          hopped_stats.da == base_stats.da - 1;
          if (!ok) {
            cochange = false;
            detail = "descent co-change fails at " + sigma.str() + ", x=" + std::to_string(x);
          }
        }
      }
    });
    out.push_back(cell_check(n, "involution", involution, detail));
    out.push_back(cell_check(n, "statistic-invariance", invariance, detail));
    out.push_back(cell_check(n, "class-closure", closure, detail));
    out.push_back(cell_check(n, "descent-co-change", cochange, detail));

    if (n <= 6) {
      bool commute = true;
      bool refined = true;
      std::string cdetail;
      for_each_permutation(n, [&](const Permutation& sigma) {
        for (int x = 1; x <= n && (commute || refined); ++x) {
          const Permutation hx = phi_prime_x(sigma, x);
          for (int y = x + 1; y <= n; ++y) {
            if (phi_prime_x(hx, y) != phi_prime_x(phi_prime_x(sigma, y), x)) {
              commute = false;
              cdetail = "commutation fails at " + sigma.str();
            }
          }
          // The invariant is the per-pair sum of the four patterns; hopping k
          // or l itself may trade occurrences between the position orders.
          for (int k = 1; k <= n; ++k) {
            for (int l = k + 1; l <= n; ++l) {
              if (vincular3_refined(sigma, k, l).total() != vincular3_refined(hx, k, l).total()) {
                refined = false;
                cdetail = "refined invariance fails at " + sigma.str();
              }
            }
          }
        }
      });
      out.push_back(cell_check(n, "commutation", commute, cdetail));
      out.push_back(cell_check(n, "refined-invariance", refined, cdetail));
    }

    // Orbit partition: distinct representatives, orbit sizes, descent sums.
    bool partition = true;
    std::string pdetail;
    std::map<Permutation, long long> orbit_sizes;
    long long covered = 0;
    std::set<Permutation> done;
    for_each_permutation(n, [&](const Permutation& sigma) {
      if (done.count(sigma)) return;
      const Orbit orbit = mfs_orbit(sigma);
      for (const Permutation& member : orbit.members) done.insert(member);
      covered += static_cast<long long>(orbit.members.size());
      const LocalStats rep_stats = local_stats(orbit.representative, kBoundaryZero);
      if (orbit_sizes.count(orbit.representative)) {
        partition = false;
        pdetail = "representative repeated: " + orbit.representative.str();
      }
      orbit_sizes[orbit.representative] = static_cast<long long>(orbit.members.size());
      if (orbit.members.size() != (1ull << rep_stats.da)) {
        partition = false;
        pdetail = "orbit size != 2^da at " + orbit.representative.str();
      }
      // Descent polynomial of the orbit must be t^val (1+t)^da of the rep.
      MPoly orbit_des;
      int dd_free = 0;
      for (const Permutation& member : orbit.members) {
        orbit_des += MPoly::variable(Var::t, static_cast<std::uint32_t>(des(member)));
        if (local_stats(member, kBoundaryZero).dd == 0) ++dd_free;
      }
      const MPoly expected =
          MPoly::variable(Var::t, static_cast<std::uint32_t>(rep_stats.val)) *
          (MPoly(1) + var_t()).pow(static_cast<std::uint32_t>(rep_stats.da));
      if (orbit_des != expected || dd_free != 1 || des(orbit.representative) != rep_stats.val) {
        partition = false;
        pdetail = "orbit descent sum off at " + orbit.representative.str();
      }
    });
    long long factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    if (covered != factorial) {
      partition = false;
      pdetail = "orbits cover " + std::to_string(covered) + " permutations";
    }
    out.push_back(cell_check(n, "orbit-partition", partition, pdetail));
    return out;
  });

  // Worked instance: one explicit hop and one three-element hop set.
  {
    const Permutation sigma({4, 7, 2, 5, 8, 9, 3, 1, 6});
    const Permutation hop3({4, 7, 2, 3, 5, 8, 9, 1, 6});
    const Permutation hop345({7, 4, 2, 3, 8, 9, 5, 1, 6});
    const bool pass = phi_x(sigma, 3) == hop3 && phi_prime_s(sigma, {3, 4, 5}) == hop345 &&
                      vincular3(sigma).total() == 9 && vincular3(hop345).total() == 9;
    cells.push_back(cell_check(9, "worked-instance", pass, "valley-hopping worked instance is off"));
  }
  return cells;
}

}  // namespace

std::string theorem_name(Theorem theorem) { return info(theorem).name; }

Theorem theorem_from_name(const std::string& name) {
  for (const TheoremInfo& entry : kTheorems) {
    if (name == entry.name) return entry.theorem;
  }
  throw std::invalid_argument("unknown theorem '" + name + "'");
}

const std::vector<Theorem>& all_theorems() {
  static const std::vector<Theorem> order = {
      Theorem::T1_1, Theorem::T1_2, Theorem::T1_3, Theorem::T3_2, Theorem::T4_1,
      Theorem::T5_1, Theorem::T6_1, Theorem::L1_1, Theorem::L5_2, Theorem::MFS};
  return order;
}

int default_nmax(Theorem theorem) { return info(theorem).default_nmax; }

int theorem_cap(Theorem theorem) { return info(theorem).cap; }

VerifyReport verify(Theorem theorem, int nmax) {
  if (nmax < 0) throw std::invalid_argument("nmax must be nonnegative");
  if (nmax > theorem_cap(theorem)) {
    throw std::invalid_argument("nmax " + std::to_string(nmax) + " exceeds cap " +
                                std::to_string(theorem_cap(theorem)) + " for " +
                                theorem_name(theorem));
  }
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.theorem = theorem;
  report.nmax = nmax;
  switch (theorem) {
    case Theorem::T1_1: report.cells = verify_t1_1(nmax); break;
    case Theorem::T1_2: report.cells = verify_t1_2(nmax); break;
    case Theorem::T1_3: report.cells = verify_t1_3(nmax); break;
    case Theorem::T3_2: report.cells = verify_t3_2(nmax); break;
    case Theorem::T4_1: report.cells = verify_t4_1(nmax); break;
    case Theorem::T5_1: report.cells = verify_t5_1(nmax); break;
    case Theorem::T6_1: report.cells = verify_t6_1(nmax); break;
    case Theorem::L1_1: report.cells = verify_l1_1(nmax); break;
    case Theorem::L5_2: report.cells = verify_l5_2(nmax); break;
    case Theorem::MFS: report.cells = verify_mfs(nmax); break;
  }
  report.pass = true;
  for (const CellResult& cell : report.cells) report.pass = report.pass && cell.pass;
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["theorem"] = theorem_name(theorem);
  j["nmax"] = nmax;
  j["pass"] = pass;
  j["wall_ms"] = wall_ms;
  nlohmann::ordered_json cell_array = nlohmann::ordered_json::array();
  for (const CellResult& cell : cells) {
    nlohmann::ordered_json cj;
    cj["n"] = cell.n;
    cj["label"] = cell.label;
    cj["pass"] = cell.pass;
    cj["detail"] = cell.detail;
    cell_array.push_back(std::move(cj));
  }
  j["cells"] = std::move(cell_array);
  return j;
}

TableKind table_from_name(const std::string& name) {
  if (name == "barc") return TableKind::BarC;
  if (name == "tildec") return TableKind::TildeC;
  if (name == "bexpansion") return TableKind::Bexpansion;
  throw std::invalid_argument("unknown table '" + name + "'");
}

std::vector<std::string> table_rows(TableKind kind, int nmax) {
  if (nmax < 1 || nmax > 12) throw std::invalid_argument("table nmax must be in 1..12");
  std::vector<std::string> rows;
  switch (kind) {
    case TableKind::BarC:
    case TableKind::TildeC: {
      const Var keep = kind == TableKind::BarC ? Var::q : Var::p;
      const Var drop = kind == TableKind::BarC ? Var::p : Var::q;
      const Series series = jfraction_series(
          specialize(named_cf(CfType::TypeA), {{drop, 1}, {Var::t, 1}, {Var::u, 1}, {Var::w, 1}}),
          nmax);
      for (int n = 1; n <= nmax; ++n) {
        const MPoly& poly = series.coeff(n);
        std::string row = std::to_string(n);
        for (std::uint32_t k = 0; k <= poly.degree(keep); ++k) {
          row += ',' + poly.coeff_of(keep, k).str();
        }
        rows.push_back(std::move(row));
      }
      return rows;
    }
    case TableKind::Bexpansion: {
      const Series series = jfraction_series(
          specialize(named_cf(CfType::TypeB), {{Var::u, 1}, {Var::v, 1}, {Var::w, 1}}), nmax);
      for (int n = 1; n <= nmax; ++n) {
        const GammaExpansion expansion = gamma_decompose(series.coeff(n));
        std::string row = std::to_string(n);
        for (const MPoly& gamma : expansion.gammas) row += ',' + gamma.str();
        rows.push_back(std::move(row));
      }
      return rows;
    }
  }
  throw std::invalid_argument("unknown table kind");
}

}  // namespace catalan
