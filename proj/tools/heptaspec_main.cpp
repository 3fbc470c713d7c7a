// heptaspec: linear heptagonal networks H_n, their Laplacian decomposition,
// Kirchhoff index and spanning-tree counts.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "heptaspec/commands.hpp"
#include "heptaspec/reports.hpp"

namespace cli = heptaspec::cli;

int main(int argc, char** argv) {
  CLI::App app{"Linear heptagonal networks: Laplacian decomposition, Kirchhoff index, complexity"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format;
  std::string method;
  std::string out_path;
  bool deep = false;
  std::optional<int> max_exact_n;
  int n = 0;

  app.add_option("--format", format, "Output format (csv|json|md, edges|json, coo|csv, text|json)");
  app.add_option("--method", method, "kirchhoff: closed|eigen|resistance; complexity: closed|matrix-tree|enumerate");
  app.add_flag("--deep", deep, "verify: run exact charpoly audits");
  app.add_option("--max-exact-n", max_exact_n, "Largest n for exact oracles (env HEPTASPEC_MAX_EXACT_N)");
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  auto* build = app.add_subcommand("build", "Vertex and edge list of H_n");
  build->add_option("n", n)->required()->check(CLI::PositiveNumber);

  auto* lap = app.add_subcommand("laplacian", "Integer Laplacian of H_n");
  lap->add_option("n", n)->required()->check(CLI::PositiveNumber);

  std::string part = "S";
  auto* dec = app.add_subcommand("decompose", "L_A, its integer similarity, or L_S");
  dec->add_option("part", part, "A | A-int | S")->required();
  dec->add_option("n", n)->required()->check(CLI::PositiveNumber);

  std::string which;
  auto* cp = app.add_subcommand("charpoly", "Exact characteristic polynomial of L, L_A or L_S");
  cp->add_option("matrix", which, "L | A | S")->required();
  cp->add_option("n", n)->required()->check(CLI::PositiveNumber);

  auto* kf = app.add_subcommand("kirchhoff", "Kirchhoff index of H_n");
  kf->add_option("n", n)->required()->check(CLI::PositiveNumber);

  auto* cx = app.add_subcommand("complexity", "Number of spanning trees of H_n");
  cx->add_option("n", n)->required()->check(CLI::PositiveNumber);

  std::string kind;
  int from = 0, to = 0;
  auto* tab = app.add_subcommand("table", "Closed-form vs oracle table over a range of n");
  tab->add_option("kind", kind, "kirchhoff | complexity")->required();
  tab->add_option("from", from)->required();
  tab->add_option("to", to)->required();

  auto* ver = app.add_subcommand("verify", "Audit every closed form at n against the oracles");
  ver->add_option("n", n)->required()->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    const int cutoff = heptaspec::resolve_max_exact_n(max_exact_n);
    auto pick = [&format](const char* fallback) { return format.empty() ? std::string(fallback) : format; };
    auto pick_method = [&method](const char* fallback) { return method.empty() ? std::string(fallback) : method; };

    cli::CommandResult result;
    if (*build) result = cli::cmd_build(n, pick("edges"));
    else if (*lap) result = cli::cmd_laplacian(n, pick("csv"));
    else if (*dec) result = cli::cmd_decompose(n, part, pick("csv"));
    else if (*cp) result = cli::cmd_charpoly(which, n, pick("text"));
    else if (*kf) result = cli::cmd_kirchhoff(n, pick_method("closed"), cutoff);
    else if (*cx) result = cli::cmd_complexity(n, pick_method("closed"), cutoff);
    else if (*tab) result = cli::cmd_table(kind, from, to, pick("csv"), cutoff);
    else if (*ver) result = cli::cmd_verify(n, deep, pick("text"), cutoff);

    if (out_path.empty()) {
      std::cout << result.output;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw std::runtime_error("cannot open " + out_path);
      out << result.output;
    }
    return result.exit_code;
  } catch (const cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
