#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "catalan/config.hpp"
#include "catalan/contfrac.hpp"
#include "catalan/gamma.hpp"
#include "catalan/insertion.hpp"
#include "catalan/pathdiag.hpp"
#include "catalan/patternclass.hpp"
#include "catalan/permstats.hpp"
#include "catalan/verify.hpp"

namespace {

using namespace catalan;
using nlohmann::ordered_json;

struct GlobalOptions {
  std::map<Var, BigInt> default_sets;  // config-file specializations for expand
};

// Config file: one `key=value` per line, `#` comments. Keys: the variable
// names p,q,t,u,v,w (integer default specializations applied by `expand`
// unless overridden by --set) and bruteforce_cap / pathsum_cap.
void load_config(const std::string& path, GlobalOptions& options) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    line = line.substr(begin, end - begin + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw CLI::ValidationError("--config", "line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    try {
      if (key == "bruteforce_cap") {
        config::set_bruteforce_cap(std::stoi(value));
      } else if (key == "pathsum_cap") {
        config::set_pathsum_cap(std::stoi(value));
      } else if (key.size() == 1) {
        options.default_sets[var_from_name(key[0])] = BigInt(value);
      } else {
        throw std::invalid_argument("unknown key");
      }
    } catch (const std::exception&) {
      throw CLI::ValidationError("--config",
                                 "line " + std::to_string(lineno) + ": bad entry '" + line + "'");
    }
  }
}

std::pair<Var, BigInt> parse_set(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq != 1) {
    throw CLI::ValidationError("--set", "expected var=integer, got '" + text + "'");
  }
  try {
    return {var_from_name(text[0]), BigInt(text.substr(2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--set", "expected var=integer, got '" + text + "'");
  }
}

CfType cf_from_name(const std::string& name) {
  if (name == "typeA") return CfType::TypeA;
  if (name == "typeB") return CfType::TypeB;
  if (name == "typeC") return CfType::TypeC;
  throw CLI::ValidationError("--cf", "expected typeA, typeB or typeC");
}

Boundary boundary_from_name(const std::string& name) {
  if (name == "zero") return kBoundaryZero;
  if (name == "inf") return kBoundaryInfinity;
  if (name == "nplus1") return kBoundaryNPlusOne;
  throw CLI::ValidationError("--boundary", "expected zero, inf or nplus1");
}

ordered_json json_int_vector(const std::vector<int>& values) {
  return ordered_json(values);
}

int cmd_expand(const GlobalOptions& options, const std::string& cf_name, int order,
               const std::vector<std::string>& sets, bool as_json, bool as_csv) {
  if (as_json == as_csv) {
    std::cerr << "expand: choose exactly one of --json or --csv\n";
    return 2;
  }
  std::map<Var, BigInt> values = options.default_sets;
  for (const std::string& entry : sets) {
    const auto [var, value] = parse_set(entry);
    values[var] = value;
  }
  std::vector<std::pair<Var, BigInt>> subs(values.begin(), values.end());
  const Series series = jfraction_series(specialize(named_cf(cf_from_name(cf_name)), subs), order);
  if (as_json) {
    std::cout << series.to_json().dump() << "\n";
  } else {
    for (int n = 0; n <= order; ++n) {
      std::cout << n << ',' << series.coeff(n).str() << "\n";
    }
  }
  return 0;
}

int cmd_stats(const std::string& perm_text, const std::string& boundary_name) {
  const Permutation sigma = Permutation::parse(perm_text);
  const Boundary boundary = boundary_from_name(boundary_name);
  const LocalStats stats = local_stats(sigma, boundary);
  const Vincular3Counts v3 = vincular3(sigma);
  ordered_json j;
  j["perm"] = sigma.str();
  j["n"] = sigma.size();
  j["boundary"] = boundary_name;
  j["pk"] = stats.pk;
  j["val"] = stats.val;
  j["da"] = stats.da;
  j["dd"] = stats.dd;
  j["peaks"] = json_int_vector(stats.peaks);
  j["valleys"] = json_int_vector(stats.valleys);
  j["double_ascents"] = json_int_vector(stats.double_ascents);
  j["double_descents"] = json_int_vector(stats.double_descents);
  j["des"] = des(sigma);
  j["descent_positions"] = json_int_vector(descent_positions(sigma));
  ordered_json vincular;
  vincular["31-2"] = vincular2(sigma, Vincular2::S31_2);
  vincular["2-31"] = vincular2(sigma, Vincular2::S2_31);
  vincular["2-13"] = vincular2(sigma, Vincular2::S2_13);
  vincular["13-2"] = vincular2(sigma, Vincular2::S13_2);
  vincular["hat2-13"] = hat_2_13(sigma);
  j["vincular"] = std::move(vincular);
  ordered_json v3j;
  v3j["31-2-4"] = v3.s31_2_4;
  v3j["31-4-2"] = v3.s31_4_2;
  v3j["41-2-3"] = v3.s41_2_3;
  v3j["41-3-2"] = v3.s41_3_2;
  v3j["total"] = v3.total();
  j["vincular3"] = std::move(v3j);
  std::cout << j.dump() << "\n";
  return 0;
}

int cmd_enumerate(const std::string& class_name_in, int n, bool poly, bool as_json) {
  const PatternClassId id = class_from_name(class_name_in);
  if (poly) {
    const MPoly polynomial = class_polynomial(n, id);
    if (as_json) {
      ordered_json j;
      j["class"] = class_name_in;
      j["n"] = n;
      j["poly"] = polynomial.to_json();
      std::cout << j.dump() << "\n";
    } else {
      std::cout << polynomial.str() << "\n";
    }
    return 0;
  }
  const std::vector<Permutation> members = generate_class(n, id);
  if (as_json) {
    ordered_json j;
    j["class"] = class_name_in;
    j["n"] = n;
    j["count"] = members.size();
    ordered_json list = ordered_json::array();
    for (const Permutation& sigma : members) list.push_back(sigma.str());
    j["perms"] = std::move(list);
    std::cout << j.dump() << "\n";
  } else {
    for (const Permutation& sigma : members) std::cout << sigma.str() << "\n";
  }
  return 0;
}

int cmd_biject(const std::string& map_name, const std::string& perm_text) {
  const Permutation sigma = Permutation::parse(perm_text);
  ordered_json j;
  j["map"] = map_name;
  j["perm"] = sigma.str();
  if (map_name == "psi" || map_name == "phi") {
    const LaguerreHistory history = map_name == "psi" ? psi_fv(sigma) : phi_fv(sigma);
    const Permutation back =
        map_name == "psi" ? psi_fv_inv(history) : phi_fv_inv(history);
    j["path"] = history.path.str();
    j["labels"] = json_int_vector(history.labels);
    j["restricted"] = history.restricted;
    j["roundtrip"] = back == sigma;
  } else if (map_name == "phi1") {
    const PathDiagramA d = phi1(sigma);
    j["path"] = d.path.str();
    j["xi"] = json_int_vector(d.xi);
    j["weight"] = weight(d).str();
    j["roundtrip"] = phi1_inv(d) == sigma;
  } else if (map_name == "phi2") {
    const PathDiagramB d = phi2(sigma);
    j["path"] = d.path.str();
    j["xi"] = json_int_vector(d.xi);
    j["weight"] = weight(d).str();
    j["roundtrip"] = phi2_inv(d) == sigma;
  } else if (map_name == "phi3") {
    const PathDiagramC d = phi3(sigma);
    j["path"] = d.path.str();
    j["xi"] = json_int_vector(d.xi);
    j["weight"] = weight(d).str();
    j["roundtrip"] = phi3_inv(d) == sigma;
  } else {
    std::cerr << "biject: unknown map '" << map_name << "'\n";
    return 2;
  }
  std::cout << j.dump() << "\n";
  return j["roundtrip"].get<bool>() ? 0 : 1;
}

int cmd_pathsum(const std::string& type_name, int n) {
  DiagramType type;
  if (type_name == "a") type = DiagramType::A;
  else if (type_name == "b") type = DiagramType::B;
  else if (type_name == "c") type = DiagramType::C;
  else {
    std::cerr << "pathsum: unknown type '" << type_name << "'\n";
    return 2;
  }
  std::cout << path_sum(n, type).str() << "\n";
  return 0;
}

int cmd_gamma(int n, const std::string& via) {
  if (n < 1) {
    std::cerr << "gamma: --n must be at least 1\n";
    return 2;
  }
  ordered_json j;
  j["n"] = n;
  j["via"] = via;
  bool all_equal = true;
  std::optional<GammaExpansion> cf_route;
  if (via == "cf" || via == "both") {
    const Series series = jfraction_series(
        specialize(named_cf(CfType::TypeB), {{Var::u, 1}, {Var::v, 1}, {Var::w, 1}}), n);
    cf_route = gamma_decompose(series.coeff(n));
  }
  ordered_json gammas = ordered_json::array();
  for (int k = 0; 2 * k <= n; ++k) {
    ordered_json entry;
    entry["k"] = k;
    if (cf_route) entry["cf"] = cf_route->gammas[static_cast<std::size_t>(k)].str();
    if (via == "perms" || via == "both") entry["perms"] = gamma_via_perms(n + 1, k).str();
    if (via == "both") {
      const bool equal = entry["cf"] == entry["perms"];
      entry["equal"] = equal;
      all_equal = all_equal && equal;
    }
    gammas.push_back(std::move(entry));
  }
  j["gammas"] = std::move(gammas);
  if (via == "both") j["equal"] = all_equal;
  std::cout << j.dump() << "\n";
  return all_equal ? 0 : 1;
}

int cmd_orbit(const std::string& perm_text) {
  const Orbit orbit = mfs_orbit(Permutation::parse(perm_text));
  for (const Permutation& member : orbit.members) std::cout << member.str() << "\n";
  std::cout << "representative: " << orbit.representative.str() << "\n";
  return 0;
}

int cmd_verify(bool all, const std::string& theorem_name_in, int nmax_flag,
               const std::string& json_path) {
  std::vector<std::pair<Theorem, int>> jobs;
  if (all) {
    for (Theorem theorem : all_theorems()) jobs.emplace_back(theorem, default_nmax(theorem));
  } else {
    const Theorem theorem = theorem_from_name(theorem_name_in);
    jobs.emplace_back(theorem, nmax_flag >= 0 ? nmax_flag : default_nmax(theorem));
  }
  // Independent theorem suites run concurrently; assembly stays in job order.
  std::vector<std::future<VerifyReport>> futures;
  futures.reserve(jobs.size());
  for (const auto& [theorem, nmax] : jobs) {
    futures.push_back(std::async(std::launch::async,
                                 [theorem = theorem, nmax = nmax] { return verify(theorem, nmax); }));
  }
  bool all_pass = true;
  ordered_json reports = ordered_json::array();
  for (auto& future : futures) {
    const VerifyReport report = future.get();
    all_pass = all_pass && report.pass;
    std::cout << (report.pass ? "PASS" : "FAIL") << ' ' << theorem_name(report.theorem)
              << " nmax=" << report.nmax << " cells=" << report.cells.size() << " ("
              << report.wall_ms << " ms)\n";
    if (!report.pass) {
      for (const CellResult& cell : report.cells) {
        if (!cell.pass) {
          std::cout << "  FAIL n=" << cell.n << ' ' << cell.label << ": " << cell.detail << "\n";
        }
      }
    }
    reports.push_back(report.to_json());
  }
  if (!json_path.empty()) {
    ordered_json out;
    out["pass"] = all_pass;
    out["reports"] = std::move(reports);
    std::ofstream file(json_path);
    if (!file) {
      std::cerr << "verify: cannot write " << json_path << "\n";
      return 2;
    }
    file << out.dump(2) << "\n";
  }
  return all_pass ? 0 : 1;
}

int cmd_table(const std::string& which, int nmax) {
  for (const std::string& row : table_rows(table_from_name(which), nmax)) {
    std::cout << row << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact continued fractions, pattern-class enumerations and gamma expansions"};
  app.require_subcommand(1);

  GlobalOptions options;
  std::string config_path;
  app.add_option("--config", config_path, "key=value config file (variable defaults, caps)");

  if (const char* cap = std::getenv("CATALAN_CF_NMAX_CAP")) {
    try {
      const int value = std::stoi(cap);
      config::set_bruteforce_cap(value);
      config::set_pathsum_cap(value);
    } catch (const std::exception&) {
      std::cerr << "ignoring non-integer CATALAN_CF_NMAX_CAP\n";
    }
  }

  auto* expand = app.add_subcommand("expand", "Taylor coefficients of a named continued fraction");
  std::string cf_name;
  int order = 0;
  std::vector<std::string> sets;
  bool expand_json = false, expand_csv = false;
  expand->add_option("--cf", cf_name, "typeA, typeB or typeC")->required();
  expand->add_option("--order", order, "truncation order")->required()->check(CLI::NonNegativeNumber);
  expand->add_option("--set", sets, "substitute var=integer (repeatable)");
  expand->add_flag("--json", expand_json, "emit the series as JSON");
  expand->add_flag("--csv", expand_csv, "emit rows n,polynomial");

  auto* stats = app.add_subcommand("stats", "statistics of one permutation (JSON)");
  std::string stats_perm, stats_boundary;
  bool stats_json = false;
  stats->add_option("--perm", stats_perm, "one-line permutation")->required();
  stats->add_option("--boundary", stats_boundary, "zero, inf or nplus1")->required();
  stats->add_flag("--json", stats_json, "JSON output (always on)");

  auto* enumerate = app.add_subcommand("enumerate", "members of a pattern class, or its polynomial");
  std::string enum_class;
  int enum_n = 0;
  bool enum_poly = false, enum_json = false, enum_csv = false;
  enumerate->add_option("--class", enum_class, "a321, a312 or b4")->required();
  enumerate->add_option("--n", enum_n, "permutation size (or polynomial degree with --poly)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  enumerate->add_flag("--poly", enum_poly, "emit the class polynomial of degree n instead");
  enumerate->add_flag("--json", enum_json, "JSON output");
  enumerate->add_flag("--csv", enum_csv, "plain rows (default)");

  auto* encode = app.add_subcommand("encode", "insertion word of a permutation");
  std::string encode_perm;
  encode->add_option("--perm", encode_perm, "one-line permutation")->required();

  auto* decode = app.add_subcommand("decode", "permutation of an insertion word");
  std::string decode_word;
  decode->add_option("--word", decode_word, "letters like m1,m1,l2,f1,f2,f1")->required();

  auto* biject = app.add_subcommand("biject", "apply a history or diagram bijection (JSON)");
  std::string biject_map, biject_perm;
  bool biject_json = false;
  biject->add_option("--map", biject_map, "phi1, phi2, phi3, psi or phi")->required();
  biject->add_option("--perm", biject_perm, "one-line permutation")->required();
  biject->add_flag("--json", biject_json, "JSON output (always on)");

  auto* pathsum = app.add_subcommand("pathsum", "sum of weights over all diagrams of a type");
  std::string pathsum_type;
  int pathsum_n = 0;
  pathsum->add_option("--type", pathsum_type, "a, b or c")->required();
  pathsum->add_option("--n", pathsum_n, "path length")->required()->check(CLI::NonNegativeNumber);

  auto* gamma = app.add_subcommand("gamma", "gamma expansion of the degree-n TypeB coefficient (JSON)");
  int gamma_n = 0;
  std::string gamma_via = "both";
  bool gamma_json = false;
  gamma->add_option("--n", gamma_n, "degree")->required();
  gamma->add_option("--via", gamma_via, "cf, perms or both (default both)")
      ->check(CLI::IsMember({"cf", "perms", "both"}));
  gamma->add_flag("--json", gamma_json, "JSON output (always on)");

  auto* orbit = app.add_subcommand("orbit", "valley-hopping orbit and its representative");
  std::string orbit_perm;
  orbit->add_option("--perm", orbit_perm, "one-line permutation")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  bool verify_all = false;
  std::string verify_theorem;
  int verify_nmax = -1;
  std::string verify_json;
  verify_cmd->add_flag("--all", verify_all, "every theorem at its default depth");
  verify_cmd->add_option("--theorem", verify_theorem,
                         "one of t1.1 t1.2 t1.3 t3.2 t4.1 t5.1 t6.1 l1.1 l5.2 mfs");
  verify_cmd->add_option("--nmax", verify_nmax, "depth override for --theorem");
  verify_cmd->add_option("--json", verify_json, "write the full report to this file");

  auto* table = app.add_subcommand("table", "reference tables as CSV rows");
  std::string table_which;
  int table_nmax = 5;
  bool table_csv = false;
  table->add_option("--which", table_which, "barc, tildec or bexpansion")->required();
  table->add_option("--nmax", table_nmax, "last row")->required();
  table->add_flag("--csv", table_csv, "CSV output (always on)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) load_config(config_path, options);
    if (expand->parsed()) return cmd_expand(options, cf_name, order, sets, expand_json, expand_csv);
    if (stats->parsed()) return cmd_stats(stats_perm, stats_boundary);
    if (enumerate->parsed()) return cmd_enumerate(enum_class, enum_n, enum_poly, enum_json);
    if (encode->parsed()) {
      std::cout << insertion_encode(Permutation::parse(encode_perm)).str() << "\n";
      return 0;
    }
    if (decode->parsed()) {
      std::cout << insertion_decode(InsertionWord::parse(decode_word)).str() << "\n";
      return 0;
    }
    if (biject->parsed()) return cmd_biject(biject_map, biject_perm);
    if (pathsum->parsed()) return cmd_pathsum(pathsum_type, pathsum_n);
    if (gamma->parsed()) return cmd_gamma(gamma_n, gamma_via);
    if (orbit->parsed()) return cmd_orbit(orbit_perm);
    if (verify_cmd->parsed()) {
      if (verify_all != verify_theorem.empty()) {
        std::cerr << "verify: pass exactly one of --all or --theorem\n";
        return 2;
      }
      return cmd_verify(verify_all, verify_theorem, verify_nmax, verify_json);
    }
    if (table->parsed()) return cmd_table(table_which, table_nmax);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
