#include "heptaspec/commands.hpp"

#include <iomanip>
#include <sstream>

#include "heptaspec/chain_graph.hpp"
#include "heptaspec/charpoly.hpp"
#include "heptaspec/closed_forms.hpp"
#include "heptaspec/oracles.hpp"
#include "heptaspec/reports.hpp"
#include "heptaspec/symmetry.hpp"

namespace heptaspec::cli {

namespace {

void require_n(int n) {
  if (n < 1) throw UsageError("n must be >= 1");
}

void require_exact(int n, int max_exact_n, const std::string& what) {
  if (n > max_exact_n)
    throw UsageError(what + " at n=" + std::to_string(n) + " exceeds max-exact-n=" +
                     std::to_string(max_exact_n));
}

template <class T>
std::string dump_matrix(const ExactMatrix<T>& m, const std::string& format) {
  if (format == "csv") return to_csv(m);
  if (format == "coo") return to_coordinate_text(m);
  throw UsageError("matrix format must be csv or coo, got '" + format + "'");
}

std::string exact_with_decimal(const Rational& q) {
  std::string s = q.get_str();
  if (!is_integer(q)) s += " ~ " + to_decimal(q, 6);
  return s + '\n';
}

}  // namespace

CommandResult cmd_build(int n, const std::string& format) {
  require_n(n);
  const HeptagonalChain chain = build_chain(n);
  if (format == "edges") return {chain.to_edge_list()};
  if (format == "json") return {chain.to_json() + '\n'};
  throw UsageError("build format must be edges or json, got '" + format + "'");
}

CommandResult cmd_laplacian(int n, const std::string& format) {
  require_n(n);
  return {dump_matrix(laplacian(build_chain(n)), format)};
}

CommandResult cmd_decompose(int n, const std::string& part, const std::string& format) {
  require_n(n);
  const DecomposedPair pair = decompose(extract_blocks(build_chain(n)));
  if (part == "A") return {dump_matrix(pair.la, format)};
  if (part == "A-int") return {dump_matrix(integerized_la(pair), format)};
  if (part == "S") return {dump_matrix(pair.ls, format)};
  throw UsageError("decompose part must be A, A-int or S, got '" + part + "'");
}

CommandResult cmd_charpoly(const std::string& which, int n, const std::string& format) {
  require_n(n);
  const HeptagonalChain chain = build_chain(n);
  CharPoly p;
  if (which == "L") {
    p = charpoly(laplacian(chain));
  } else if (which == "A" || which == "S") {
    const DecomposedPair pair = decompose(extract_blocks(chain));
    p = which == "A" ? charpoly(integerized_la(pair)) : charpoly(pair.ls);
  } else {
    throw UsageError("charpoly matrix must be L, A or S, got '" + which + "'");
  }
  if (format == "json") return {p.to_json() + '\n'};
  if (format == "text") return {p.to_string() + '\n'};
  throw UsageError("charpoly format must be json or text, got '" + format + "'");
}

CommandResult cmd_kirchhoff(int n, const std::string& method, int max_exact_n) {
  require_n(n);
  if (method == "closed") return {exact_with_decimal(kf_closed(n))};
  if (method == "resistance") {
    require_exact(n, max_exact_n, "exact resistance");
    return {exact_with_decimal(kirchhoff_resistance(build_chain(n)))};
  }
  if (method == "eigen") {
    std::ostringstream os;
    os << std::setprecision(15) << kirchhoff_spectral(build_chain(n)) << '\n';
    return {os.str()};
  }
  throw UsageError("kirchhoff method must be closed, eigen or resistance, got '" + method + "'");
}

CommandResult cmd_complexity(int n, const std::string& method, int max_exact_n) {
  require_n(n);
  if (method == "closed") return {tau_closed(n).get_str() + '\n'};
  if (method == "matrix-tree") {
    require_exact(n, max_exact_n, "matrix-tree");
    return {spanning_trees_matrix_tree(build_chain(n)).get_str() + '\n'};
  }
  if (method == "enumerate") {
    const HeptagonalChain chain = build_chain(n);
    if (chain.num_edges() > kEnumerationEdgeLimit)
      throw UsageError("enumerate supports n <= 2 (|E| <= 25); H_" + std::to_string(n) + " has " +
                       std::to_string(chain.num_edges()) + " edges");
    return {spanning_trees_enumerate(chain).get_str() + '\n'};
  }
  throw UsageError("complexity method must be closed, matrix-tree or enumerate, got '" + method + "'");
}

CommandResult cmd_table(const std::string& kind, int from, int to, const std::string& format,
                        int max_exact_n) {
  const auto k = parse_table_kind(kind);
  if (!k) throw UsageError("table kind must be kirchhoff or complexity, got '" + kind + "'");
  const auto f = parse_table_format(format);
  if (!f) throw UsageError("table format must be csv, json or md, got '" + format + "'");
  if (from < 1 || to < from) throw UsageError("table range must satisfy 1 <= from <= to");
  return {render_table(*k, table_rows(*k, from, to, max_exact_n), *f)};
}

CommandResult cmd_verify(int n, bool deep, const std::string& format, int max_exact_n) {
  require_n(n);
  const VerificationReport report = verify(n, {deep, max_exact_n});
  std::string out;
  if (format == "json")
    out = report.to_json() + '\n';
  else if (format == "text")
    out = report.summary();
  else
    throw UsageError("verify format must be json or text, got '" + format + "'");
  return {out, report.passed() ? 0 : 1};
}

}  // namespace heptaspec::cli
