#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "subhardy/classify.hpp"
#include "subhardy/kernels.hpp"
#include "subhardy/opcomp.hpp"
#include "subhardy/parse.hpp"
#include "subhardy/points.hpp"
#include "subhardy/report.hpp"
#include "subhardy/spaces.hpp"

namespace {

using namespace subhardy;

struct Defaults {
  double rho_max = 0.9;
  int n_max = 64;
  std::uint64_t seed = 42;
  double tol_rel = 1e-10;
  double margin = 1e-9;
};

Defaults load_config(const std::string& path) {
  Defaults d;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config: expected key=value at line " + std::to_string(lineno));
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "rho_max") {
      d.rho_max = std::stod(value);
    } else if (key == "N") {
      d.n_max = std::stoi(value);
    } else if (key == "seed") {
      d.seed = std::stoull(value);
    } else if (key == "tol_rel") {
      d.tol_rel = std::stod(value);
    } else if (key == "margin") {
      d.margin = std::stod(value);
    } else {
      throw std::runtime_error("config: unknown key '" + key + "'");
    }
  }
  return d;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

struct PointChoice {
  std::string grid;    // "nr,na,rho"
  std::string random;  // "n,rho,seed"
};

PointSet make_points(const PointChoice& choice, const Defaults& d) {
  if (!choice.grid.empty() && !choice.random.empty()) {
    throw std::runtime_error("use either --grid or --random, not both");
  }
  if (!choice.random.empty()) {
    const auto parts = split(choice.random, ',');
    if (parts.size() != 3) throw std::runtime_error("--random expects n,rho,seed");
    return random_points(std::stoi(parts[0]), std::stod(parts[1]), std::stoull(parts[2]));
  }
  if (!choice.grid.empty()) {
    const auto parts = split(choice.grid, ',');
    if (parts.size() != 3) throw std::runtime_error("--grid expects nr,na,rho");
    return polar_grid(std::stoi(parts[0]), std::stoi(parts[1]), std::stod(parts[2]));
  }
  return polar_grid(4, 16, d.rho_max);
}

nlohmann::json points_params(const PointChoice& choice, const PointSet& pts) {
  nlohmann::json j;
  j["count"] = static_cast<int>(pts.size());
  j["rho_max"] = pts.rho_max;
  j["seed"] = pts.seed;
  j["source"] = !choice.random.empty() ? "random" : "grid";
  return j;
}

std::vector<double> parse_scan_grid(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 3) throw std::runtime_error("--grid expects lo:hi:step");
  const double lo = std::stod(parts[0]);
  const double hi = std::stod(parts[1]);
  const double step = std::stod(parts[2]);
  if (!(step > 0.0) || hi < lo) throw std::runtime_error("--grid expects lo <= hi and step > 0");
  std::vector<double> out;
  for (double r = lo; r <= hi + step * 0.5; r += step) out.push_back(r);
  return out;
}

bool has_inconclusive(const Report& report) {
  for (const auto& c : report.caveats) {
    if (c.find("inconclusive") != std::string::npos) return true;
    if (c.find("margin-fail") != std::string::npos) return true;
  }
  return false;
}

int emit(const Report& report, bool strict) {
  std::cout << report.dump();
  if (strict && has_inconclusive(report)) return 3;
  return 0;
}

// ---- subcommand bodies ----------------------------------------------------

int run_classify(const std::string& symbol_text, const PointChoice& choice, int n_max,
                 const Defaults& d, bool strict) {
  const AnalyticSymbol f = parse_symbol(symbol_text);
  const PointSet pts = make_points(choice, d);
  const ClassLabel label = consistency_report(f, pts, n_max, d.margin, d.tol_rel);

  Report report;
  report.command = "classify";
  report.symbol = print_symbol(f);
  report.parameters["N"] = n_max;
  report.parameters["margin"] = d.margin;
  report.parameters["tol_rel"] = d.tol_rel;
  report.parameters["points"] = points_params(choice, pts);
  report.verdicts.push_back(class_label_to_json(label));
  report.caveats = label.caveats;
  if (report.caveats.empty()) report.caveats.push_back("sampled decision");
  return emit(report, strict);
}

int run_gram(const std::string& kernel, const std::string& symbol_text, const PointChoice& choice,
             const Defaults& d, bool strict) {
  const KernelFamily family = family_from_name(kernel);
  std::optional<AnalyticSymbol> sym;
  if (family_needs_symbol(family)) {
    if (symbol_text.empty()) throw std::runtime_error("--symbol required for " + kernel);
    sym = parse_symbol(symbol_text);
  }
  const KernelSpec spec(family, sym);
  const PointSet pts = make_points(choice, d);
  const HermitianMatrix g = gram(spec, pts);
  const Verdict v = psd_verdict(g, d.tol_rel);
  const RangeFlagStatus flag = check_range_flag(spec, pts, d.margin);

  Report report;
  report.command = "gram";
  report.symbol = sym ? print_symbol(*sym) : "";
  report.parameters["kernel"] = kernel;
  report.parameters["tol_rel"] = d.tol_rel;
  report.parameters["margin"] = d.margin;
  report.parameters["points"] = points_params(choice, pts);
  nlohmann::json row = verdict_to_json("gram_" + kernel, v);
  row["order"] = g.order();
  row["range_flag"] = range_flag_name(flag);
  row["condition_number"] = condition_number(g);
  report.verdicts.push_back(std::move(row));
  report.caveats.push_back("sampled decision");
  if (flag == RangeFlagStatus::fail) report.caveats.push_back("range flag failed");
  if (flag == RangeFlagStatus::margin) report.caveats.push_back("range flag within margin");
  return emit(report, strict);
}

int run_opcheck(const std::string& symbol_text, const std::string& space_s,
                const std::string& variant_s, int n_max, const Defaults& d, bool strict) {
  const AnalyticSymbol f = parse_symbol(symbol_text);
  const Space space = space_from_name(space_s);
  const DefectVariant variant = variant_from_name(variant_s);
  const HermitianMatrix m = defect_compression(f, n_max, space, variant);
  const Verdict v = psd_verdict(m, d.tol_rel);
  const double tail = f.truncated_coeffs(n_max).second;

  Report report;
  report.command = "opcheck";
  report.symbol = print_symbol(f);
  report.parameters["N"] = n_max;
  report.parameters["space"] = space_s;
  report.parameters["variant"] = variant_s;
  report.parameters["tol_rel"] = d.tol_rel;
  nlohmann::json row = verdict_to_json("defect_compression", v);
  nlohmann::json diag = nlohmann::json::array();
  for (int i = 0; i <= std::min(n_max, 7); ++i) diag.push_back(m(i, i).real());
  row["diagonal_head"] = std::move(diag);
  row["truncation_bound"] = tail;
  report.verdicts.push_back(std::move(row));
  if (v.psd) {
    report.caveats.push_back("compression PSD is necessary evidence only, not a proof");
  } else {
    report.caveats.push_back("compression non-PSD disproves operator positivity");
  }
  if (tail > 0.0) {
    report.caveats.push_back("truncated");
    report.verdicts.back()["entrywise_error_bound"] = (n_max + 1) * tail * tail;
  }
  return emit(report, strict);
}

int run_scan(const std::string& family_s, const std::string& grid_s, const std::string& space_s,
             const std::string& variant_s, int n_max, const std::string& format, const Defaults& d,
             bool strict) {
  if (format != "json" && format != "csv") {
    throw std::runtime_error("--format expects json or csv");
  }
  const SymbolFamily family = symbol_family(family_s);
  const std::vector<double> grid = parse_scan_grid(grid_s);
  const Space space = space_from_name(space_s);
  const DefectVariant variant = variant_from_name(variant_s);
  const ScanResult scan = threshold_scan(family, grid, n_max, space, variant, d.tol_rel);

  if (format == "csv") {
    std::string out = "r,min_eig,psd\n";
    char buf[80];
    for (const auto& row : scan.rows) {
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%s\n", row.r, row.min_eig,
                    row.psd ? "true" : "false");
      out += buf;
    }
    std::cout << out;
    return 0;
  }

  Report report;
  report.command = "scan";
  report.symbol = family_s;
  report.parameters["N"] = n_max;
  report.parameters["space"] = space_s;
  report.parameters["variant"] = variant_s;
  report.parameters["grid"] = grid_s;
  report.parameters["tol_rel"] = d.tol_rel;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : scan.rows) {
    nlohmann::json r;
    r["r"] = row.r;
    r["min_eig"] = row.min_eig;
    r["psd"] = row.psd;
    rows.push_back(std::move(r));
  }
  nlohmann::json j;
  j["name"] = "threshold_scan";
  j["rows"] = std::move(rows);
  nlohmann::json roots = nlohmann::json::array();
  for (double r : scan.refined_roots) roots.push_back(r);
  j["refined_roots"] = std::move(roots);
  report.verdicts.push_back(std::move(j));
  report.caveats.push_back("compression PSD is necessary evidence only, not a proof");
  return emit(report, strict);
}

int run_subhardy(const std::string& symbol_text, const std::string& check, int n_max,
                 const Defaults& d, bool strict) {
  const AnalyticSymbol phi = parse_symbol(symbol_text);
  Report report;
  report.command = "subhardy";
  report.symbol = print_symbol(phi);
  report.parameters["N"] = n_max;
  report.parameters["check"] = check;
  report.parameters["rho_max"] = d.rho_max;
  report.parameters["seed"] = d.seed;
  report.parameters["tol_rel"] = d.tol_rel;
  const bool all = check == "all";

  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const FlagError& e) {
      nlohmann::json row;
      row["name"] = name;
      row["skipped"] = std::string(e.what());
      report.verdicts.push_back(std::move(row));
      report.caveats.push_back(name + ": range flag failed");
      if (!all) throw;
    }
  };

  if (all || check == "isometry") {
    guarded("isometry", [&] {
      const PointSet pts = random_points(50, d.rho_max, d.seed);
      nlohmann::json row;
      row["name"] = "isometry";
      row["residual"] = v_isometry_residual(phi, pts);
      row["pairs"] = static_cast<int>(pts.size() * pts.size());
      report.verdicts.push_back(std::move(row));
    });
  }
  if (all || check == "decomposition") {
    guarded("decomposition", [&] {
      const PointSet pts = random_points(20, d.rho_max, d.seed);
      const DecompositionResult r = hardy_decomposition_check(phi, pts, n_max);
      nlohmann::json row;
      row["name"] = "decomposition";
      row["kernel_residual"] = r.kernel_residual;
      row["eq4_residual"] = r.eq4_residual;
      row["eq5_residual"] = r.eq5_residual;
      report.verdicts.push_back(std::move(row));
      report.caveats.push_back(
          "decomposition matrix identities are evidence: square roots of compressions only "
          "approximate compressions of square roots");
    });
  }
  if (all || check == "rank-one") {
    guarded("rank-one", [&] {
      const PointSet nodes = random_points(12, 0.7, d.seed);
      const PointSet evals = random_points(30, 0.7, d.seed + 1);
      const RankOneResult r = rank_one_perturbation_check(phi, nodes, evals);
      nlohmann::json row;
      row["name"] = "rank-one";
      row["rank"] = r.rank;
      row["degenerate"] = r.degenerate;
      if (!r.degenerate) {
        row["sigma_ratio"] = r.sigma_ratio;
        row["proportionality_defect"] = r.proportionality_defect;
        row["formula_match"] = r.formula_match;
        row["node_gram_condition"] =
            condition_number(gram(KernelSpec(KernelFamily::h_space, phi.reciprocal()), nodes));
        const NonextremeEvidence ne = nonextreme_evidence(phi.reciprocal(), evals);
        row["reciprocal_sup_modulus"] = ne.sup_modulus;
        row["reciprocal_nonextreme"] = ne.nonextreme;
      }
      report.verdicts.push_back(std::move(row));
      report.caveats.push_back(
          "assumed reading: the perturbation coupling is <phi h, S*phi> (S*phi, not S*h, in the "
          "final scalar)");
    });
  }
  if (all || check == "diagram") {
    guarded("diagram", [&] {
      const PointSet evals = random_points(30, 0.8, d.seed + 2);
      const KernelSection h1 =
          KernelSection::kernel_at(SectionSpace::k_space, phi, DiskPoint(cx(0.0, 0.0)));
      const KernelSection h2 =
          KernelSection::kernel_at(SectionSpace::l_space, phi, DiskPoint(cx(0.3, 0.0)));
      const PairingResult r = pairing_checks(phi, h1, h2, evals);
      nlohmann::json row;
      row["name"] = "diagram";
      row["diagram_residual"] = r.diagram_residual;
      row["rank_one_residual"] = r.rank_one_residual;
      report.verdicts.push_back(std::move(row));
    });
  }
  if (report.verdicts.empty()) throw std::runtime_error("unknown --check: " + check);
  report.caveats.push_back("sampled decision");
  return emit(report, strict);
}

int run_selftest(const Defaults& d, bool strict) {
  Report report;
  report.command = "selftest";
  report.symbol = "";
  report.parameters["tol_rel"] = d.tol_rel;
  bool all_pass = true;
  auto add = [&](const std::string& name, bool pass, double value) {
    nlohmann::json row;
    row["name"] = name;
    row["pass"] = pass;
    row["value"] = value;
    report.verdicts.push_back(std::move(row));
    all_pass = all_pass && pass;
  };

  {
    const ScanResult s = threshold_scan(symbol_family("rz"), {0.5, 0.7, 0.71, 0.8}, 16,
                                        Space::hardy, DefectVariant::sb);
    const double root = s.refined_roots.empty() ? 0.0 : s.refined_roots[0];
    add("scan_rz_root", std::abs(root - 1.0 / std::sqrt(2.0)) <= 1e-6, root);
  }
  {
    const PointSet pts = polar_grid(4, 16, 0.9);
    bool ok = true;
    for (const char* text : {"poly:0,1", "const:2", "poly:4*recip(poly:2,1)", "poly:1.2,0.1",
                             "poly:1,1"}) {
      const ClassLabel label = consistency_report(parse_symbol(text), pts, 16, d.margin, d.tol_rel);
      ok = ok && label.consistent;
    }
    add("classify_suite_consistent", ok, ok ? 1.0 : 0.0);
  }
  {
    double worst = 0.0;
    const PointSet pts = random_points(20, 0.9, d.seed);
    for (const char* text : {"const:2", "poly:4*recip(poly:2,1)", "poly:1.2,0.1"}) {
      worst = std::max(worst, v_isometry_residual(parse_symbol(text), pts));
    }
    add("isometry_residual", worst < 1e-12, worst);
  }
  {
    double worst = 0.0;
    const PointSet pts = random_points(20, 0.9, d.seed);
    for (const char* text : {"const:1.2", "poly:1.2,0.1"}) {
      const AnalyticSymbol phi = parse_symbol(text);
      worst = std::max(worst, kernel_sum_residual(KernelSpec(KernelFamily::k_space, phi),
                                                  KernelSpec(KernelFamily::l_space, phi),
                                                  KernelSpec(KernelFamily::szego), pts));
    }
    add("decomposition_kernel_residual", worst < 1e-12, worst);
  }
  {
    const PointSet nodes = random_points(12, 0.7, d.seed);
    const PointSet evals = random_points(30, 0.7, d.seed + 1);
    bool ok = true;
    double worst = 0.0;
    for (const char* text : {"poly:1.2,0.1", "poly:4*recip(poly:2,1)"}) {
      const RankOneResult r = rank_one_perturbation_check(parse_symbol(text), nodes, evals);
      ok = ok && r.rank == 1 && r.sigma_ratio < 1e-8;
      worst = std::max(worst, r.proportionality_defect);
    }
    add("rank_one", ok && worst < 1e-9, worst);
  }
  {
    const AnalyticSymbol phi = parse_symbol("poly:1.2,0.1");
    const PairingResult r = pairing_checks(
        phi, KernelSection::kernel_at(SectionSpace::k_space, phi, DiskPoint(cx(0.0, 0.0))),
        KernelSection::kernel_at(SectionSpace::l_space, phi, DiskPoint(cx(0.3, 0.0))),
        random_points(30, 0.8, d.seed + 2));
    add("pairing", r.diagram_residual < 1e-12 && r.rank_one_residual < 1e-10,
        std::max(r.diagram_residual, r.rank_one_residual));
  }
  {
    const AnalyticSymbol f = parse_symbol("poly:2,1");
    const AnalyticSymbol r = f.reciprocal();
    double worst = 0.0;
    const PointSet pts = random_points(100, 0.9, d.seed + 3);
    for (const auto& p : pts.points) {
      worst = std::max(worst, std::abs((f * r)(p) - cx(1.0, 0.0)));
    }
    add("reciprocal_roundtrip", worst < 1e-12, worst);
  }

  report.caveats.push_back(all_pass ? "all checks passed" : "failures present");
  const int rc = emit(report, strict);
  if (rc != 0) return rc;
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Defaults defaults;
  // Config seeds the defaults; explicit flags still win because they are
  // parsed afterwards.
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") {
      try {
        defaults = load_config(argv[i + 1]);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
    }
  }

  CLI::App app{"kernel positivity, operator compressions and sub-Hardy space checks on the unit disk"};
  app.require_subcommand(1);
  std::string config_path;
  bool strict = false;
  app.add_option("--config", config_path, "key=value defaults file (rho_max, N, seed, tol_rel, margin)");
  app.add_flag("--strict", strict, "exit 3 on inconclusive or margin-fail verdicts");

  std::string symbol_text, kernel, space_s = "hardy", variant_s = "sb", check = "all";
  std::string family_s = "rz", scan_grid = "0.5:0.9:0.01", format = "json";
  PointChoice choice;
  int n_max = defaults.n_max;

  auto add_points_opts = [&](CLI::App* cmd) {
    cmd->add_option("--grid", choice.grid, "polar grid nr,na,rho");
    cmd->add_option("--random", choice.random, "random points n,rho,seed");
  };

  CLI::App* c_classify = app.add_subcommand("classify", "membership labels for a symbol");
  c_classify->add_option("--symbol", symbol_text, "symbol expression")->required();
  add_points_opts(c_classify);
  c_classify->add_option("--N", n_max, "compression order");

  CLI::App* c_gram = app.add_subcommand("gram", "kernel Gram matrix PSD verdict");
  c_gram->add_option("--kernel", kernel, "kernel family name")->required();
  c_gram->add_option("--symbol", symbol_text, "symbol expression");
  add_points_opts(c_gram);

  CLI::App* c_opcheck = app.add_subcommand("opcheck", "defect compression PSD verdict");
  c_opcheck->add_option("--symbol", symbol_text, "symbol expression")->required();
  c_opcheck->add_option("--space", space_s, "hardy|bergman");
  c_opcheck->add_option("--variant", variant_s, "sb|sb1-lower|sb1-upper");
  c_opcheck->add_option("--N", n_max, "compression order");

  CLI::App* c_scan = app.add_subcommand("scan", "threshold scan over a symbol family");
  c_scan->add_option("--family", family_s, "rz|const");
  c_scan->add_option("--grid", scan_grid, "lo:hi:step");
  c_scan->add_option("--space", space_s, "hardy|bergman");
  c_scan->add_option("--variant", variant_s, "sb|sb1-lower|sb1-upper");
  c_scan->add_option("--N", n_max, "compression order");
  c_scan->add_option("--format", format, "json|csv");

  CLI::App* c_subhardy = app.add_subcommand("subhardy", "space-structure checks for a symbol");
  c_subhardy->add_option("--symbol", symbol_text, "symbol expression")->required();
  c_subhardy->add_option("--check", check, "isometry|decomposition|rank-one|diagram|all");
  c_subhardy->add_option("--N", n_max, "compression order");

  CLI::App* c_selftest = app.add_subcommand("selftest", "run the built-in golden suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (c_classify->parsed()) return run_classify(symbol_text, choice, n_max, defaults, strict);
    if (c_gram->parsed()) return run_gram(kernel, symbol_text, choice, defaults, strict);
    if (c_opcheck->parsed())
      return run_opcheck(symbol_text, space_s, variant_s, n_max, defaults, strict);
    if (c_scan->parsed())
      return run_scan(family_s, scan_grid, space_s, variant_s, n_max, format, defaults, strict);
    if (c_subhardy->parsed()) return run_subhardy(symbol_text, check, n_max, defaults, strict);
    if (c_selftest->parsed()) return run_selftest(defaults, strict);
  } catch (const std::exception& e) {
    Report report;
    report.command = app.get_subcommands().empty() ? "" : app.get_subcommands()[0]->get_name();
    report.symbol = symbol_text;
    report.caveats.push_back(std::string("error: ") + e.what());
    std::cout << report.dump();
    return 2;
  }
  return 2;
}
