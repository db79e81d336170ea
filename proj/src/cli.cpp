#include "mincomb/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "mincomb/json_io.hpp"
#include "mincomb/oracle.hpp"
#include "mincomb/report.hpp"

namespace mincomb {

namespace {

bool write_output(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

std::vector<OracleDelta> oracle_deltas(const PointSet& a, const std::vector<MinimalCombination>& result, double tol) {
  std::vector<OracleDelta> deltas;
  for (const auto& mc : result) {
    OracleDelta delta;
    for (const auto& cert : mc.certificates) {
      std::vector<Vector> pts;
      for (auto idx : cert.subset) pts.push_back(a[idx]);
      const auto p = nearest_point_oracle(pts, {.tol = tol});
      for (std::size_t i = 0; i < p.size(); ++i) {
        delta.max_abs_delta = std::max(delta.max_abs_delta, std::abs(p[i] - mc.beta[i].to_double()));
      }
    }
    deltas.push_back(delta);
  }
  return deltas;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal combinations of weight sets and critical hypersurfaces", kToolName};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  AnalyzeOptions analyze_opts;
  std::string format_name = "json";
  std::string out_path;
  std::size_t k_max = 0;
  auto* analyze_cmd = app.add_subcommand("analyze", "Minimal combinations and candidate hypersurfaces for (n, d)");
  analyze_cmd->add_option("--vars", analyze_opts.n, "Number of variables n")->required()->check(CLI::Range(2, 64));
  analyze_cmd->add_option("--degree", analyze_opts.d, "Degree d")->required()->check(CLI::Range(1, 64));
  analyze_cmd->add_flag("--weyl-only", analyze_opts.weyl_only, "Keep beta with decreasing coordinates");
  analyze_cmd->add_flag("--interior-only", analyze_opts.interior_only, "Keep beta inside the weight polytope");
  auto* k_opt = analyze_cmd->add_option("--k-max", k_max, "Largest subset size")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--format", format_name, "json, table or latex")
      ->check(CLI::IsMember({"json", "table", "latex"}));
  analyze_cmd->add_option("--out", out_path, "Write the report to PATH");
  analyze_cmd->add_flag("--reproducible", analyze_opts.reproducible, "Omit the timestamp");
  analyze_cmd->add_option("--max-monomials", analyze_opts.max_monomials, "Size guard on C(n+d-1, d)");
  analyze_cmd->add_option("--threads", analyze_opts.threads, "Enumeration workers")->check(CLI::Range(1u, 256u));

  std::string input_path;
  bool use_oracle = false;
  double tol = OracleOptions{}.tol;
  auto* mincomb_cmd = app.add_subcommand("mincomb", "Minimal combinations of a point set read from JSON");
  mincomb_cmd->add_option("--input", input_path, "PointSet JSON file")->required();
  mincomb_cmd->add_option("--format", format_name, "json, table or latex")
      ->check(CLI::IsMember({"json", "table", "latex"}));
  mincomb_cmd->add_flag("--oracle", use_oracle, "Cross-check each beta with the floating-point oracle");
  mincomb_cmd->add_option("--tol", tol, "Oracle duality-gap tolerance")->check(CLI::PositiveNumber);
  mincomb_cmd->add_option("--out", out_path, "Write the report to PATH");

  int d_weights = 0;
  int n_weights = 0;
  auto* weights_cmd = app.add_subcommand("weights", "Weight table of degree-d monomials in n variables");
  weights_cmd->add_option("--vars", n_weights, "Number of variables n")->required()->check(CLI::Range(1, 64));
  weights_cmd->add_option("--degree", d_weights, "Degree d")->required()->check(CLI::Range(0, 64));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolName << " " << kToolVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    const Format format = parse_format(format_name);
    if (*analyze_cmd) {
      if (*k_opt) analyze_opts.k_max = k_max;
      const AnalysisReport report = analyze(analyze_opts);
      return write_output(render(report, format), out_path, out, err) ? 0 : 1;
    }
    if (*mincomb_cmd) {
      std::ifstream file(input_path, std::ios::binary);
      if (!file) {
        err << "error: cannot read " << input_path << "\n";
        return 1;
      }
      std::stringstream buffer;
      buffer << file.rdbuf();
      const PointSet a = parse_point_set(buffer.str());
      const auto result = minimal_combinations(a);
      std::vector<OracleDelta> deltas;
      if (use_oracle) deltas = oracle_deltas(a, result, tol);
      return write_output(render_mincomb(a, result, format, use_oracle ? &deltas : nullptr), out_path, out, err) ? 0
                                                                                                                 : 1;
    }
    if (*weights_cmd) {
      out << to_json(WeightTable(n_weights, d_weights)).dump(2) << "\n";
      return 0;
    }
  } catch (const OracleFailedError& e) {
    err << "oracle-failed: " << e.what() << "\n";
    return 2;
  } catch (const TooLargeError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace mincomb
