// Command-line driver: normal forms, verification suites, table exports.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "dynsu2/parser.hpp"
#include "dynsu2/report.hpp"
#include "dynsu2/tables.hpp"

using namespace dynsu2;

int main(int argc, char** argv) {
  CLI::App app{"SU(2) dynamical quantum group toolkit"};
  app.require_subcommand(1);

  uint64_t default_seed = kDefaultSeed;
  if (const char* env = std::getenv("DYNSU2_SEED")) default_seed = std::strtoull(env, nullptr, 0);

  // normalize
  std::string expr;
  std::string norm_mode = "sl2";
  auto* cmd_norm = app.add_subcommand("normalize", "print the basis normal form");
  cmd_norm->add_option("expr", expr, "expression")->required();
  cmd_norm->add_option("--mode", norm_mode, "sl2 | m2")->check(CLI::IsMember({"sl2", "m2"}));

  // verify
  std::string suite_name;
  SuiteOptions opts;
  opts.seed = default_seed;
  std::string out_file;
  bool no_timing = false;
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify->add_option("suite", suite_name, "suite name or 'all'")->required();
  cmd_verify->add_option("--bound", opts.bound, "index/degree bound");
  cmd_verify->add_option("--points", opts.points, "sample points per identity");
  cmd_verify->add_option("--seed", opts.seed, "global seed");
  cmd_verify->add_flag("--exhaustive", opts.exhaustive, "sweep all index choices");
  cmd_verify->add_option("--jobs", opts.jobs, "worker threads (0 = hardware)");
  cmd_verify->add_option("--rmatrix", opts.variant, "qdyb input: dynamical | rational")
      ->check(CLI::IsMember({"dynamical", "rational"}));
  cmd_verify->add_option("--out", out_file, "write the JSON report to a file");
  cmd_verify->add_flag("--no-timing", no_timing, "omit wall_ms for byte-identical reports");

  // table
  std::string kind, point_text;
  int tN = 1, tM = 1, ts = 0, td = 3, tk = 3;
  std::string backend = "factored";
  std::string format = "json";
  bool dyn = false;
  auto* cmd_table = app.add_subcommand("table", "emit value tables");
  cmd_table->add_option("kind", kind, "matelem | tfun | cg | moments | schur")
      ->required()
      ->check(CLI::IsMember({"matelem", "tfun", "cg", "moments", "schur"}));
  cmd_table->add_option("--N", tN, "corepresentation index");
  cmd_table->add_option("--M", tM, "left corepresentation index");
  cmd_table->add_option("--s", ts, "decomposition step");
  cmd_table->add_option("--d", td, "moment degree");
  cmd_table->add_option("--kmax", tk, "row bound for dynamical CG tables");
  cmd_table->add_flag("--dyn", dyn, "cg: dynamical CG coefficients instead");
  cmd_table->add_option("--backend", backend, "matelem backend")
      ->check(CLI::IsMember({"factored", "combinatorial"}));
  cmd_table->add_option("--format", format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_table->add_option("--point", point_text, "q=a/b,lambda=c/d,... (values of q^x)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_norm) {
      Mode mode = norm_mode == "m2" ? Mode::M2 : Mode::SL2;
      std::cout << render(parse_element(expr, mode)) << "\n";
      return 0;
    }
    if (*cmd_verify) {
      if (!is_suite_name(suite_name)) {
        std::cerr << "unknown suite '" << suite_name << "'; one of:";
        for (const auto& [n, fn] : suite_registry()) std::cerr << " " << n;
        std::cerr << " all\n";
        return 2;
      }
      if (opts.variant == "dynamical") opts.variant.clear();
      SuiteReport rep = run_suite(suite_name, opts);
      std::string json = rep.to_json(!no_timing);
      if (out_file.empty()) {
        std::cout << json << "\n";
      } else {
        std::ofstream f(out_file);
        f << json << "\n";
      }
      return rep.passed() ? 0 : 1;
    }
    if (*cmd_table) {
      std::optional<Point> at;
      if (!point_text.empty()) at = parse_point(point_text);
      TableFormat fmt = format == "csv" ? TableFormat::Csv : TableFormat::Json;
      if (kind == "matelem")
        std::cout << table_matelem(tN,
                                   backend == "factored" ? MatBackend::Factored
                                                         : MatBackend::Combinatorial,
                                   at, fmt)
                  << "\n";
      else if (kind == "tfun")
        std::cout << table_tfun(tN, at, fmt) << "\n";
      else if (kind == "cg" && dyn)
        std::cout << table_cg_dyn(ts, tk, at, fmt) << "\n";
      else if (kind == "cg")
        std::cout << table_cg(tM, tN, ts, at, fmt) << "\n";
      else if (kind == "schur")
        std::cout << table_schur(tM, tN, at, fmt) << "\n";
      else
        std::cout << table_moments(td, at, fmt) << "\n";
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
