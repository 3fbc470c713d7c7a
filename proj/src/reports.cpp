#include "heptaspec/reports.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <sstream>
#include <thread>

#include "heptaspec/chain_graph.hpp"
#include "heptaspec/charpoly.hpp"
#include "heptaspec/oracles.hpp"
#include "heptaspec/symmetry.hpp"
#include "json.hpp"

namespace heptaspec {

namespace {

// Above this n the dense float eigensolver is skipped as well.
constexpr int kNumericMaxN = 120;
// Exact charpoly of the full Laplacian in deep mode.
constexpr int kDeepFullCharpolyMaxN = 10;
// Exact-vs-float agreement.
constexpr double kFloatRelTol = 1e-9;

double rel_dev(const Rational& closed, const Rational& oracle) {
  if (oracle == 0) return closed == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  return Rational(abs(closed - oracle) / abs(oracle)).get_d();
}

double rel_dev(const Rational& closed, double oracle) {
  const double c = closed.get_d();
  if (oracle == 0) return c == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::abs(c - oracle) / std::abs(oracle);
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

ReportEntry exact_entry(Quantity q, const Rational& closed, const Rational& oracle) {
  ReportEntry e;
  e.quantity = quantity_name(q);
  e.closed_form_value = closed.get_str();
  e.oracle_value = oracle.get_str();
  e.match = closed == oracle;
  e.relative_deviation = rel_dev(closed, oracle);
  return e;
}

ReportEntry float_entry(Quantity q, const Rational& closed, double oracle) {
  ReportEntry e;
  e.quantity = quantity_name(q);
  e.closed_form_value = closed.get_str();
  e.oracle_value = fmt_double(oracle);
  e.relative_deviation = rel_dev(closed, oracle);
  e.match = e.relative_deviation < kFloatRelTol;
  e.note = "float oracle, relative tolerance 1e-9";
  return e;
}

ReportEntry skipped_entry(Quantity q, const Rational& closed, const std::string& why) {
  ReportEntry e;
  e.quantity = quantity_name(q);
  e.closed_form_value = closed.get_str();
  e.oracle_value = "skipped";
  e.skipped = true;
  e.note = why;
  return e;
}

std::string printed_ls_note(const Rational& closed, const Rational& printed_value) {
  std::string note = "printed tridiag(3,2,...,3) gives " + printed_value.get_str();
  note += closed == printed_value ? " (equals the closed form)" : " (differs from the closed form)";
  note += "; the graph's L_S carries 4 at interior rung positions";
  return note;
}

Integer trace(const IntMatrix& m) {
  Integer t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// e_{N-1} = tr adj(M).
Integer second_minor_sum(const IntMatrix& m) {
  Integer det;
  return trace(adjugate(m, det));
}

}  // namespace

int resolve_max_exact_n(std::optional<int> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("HEPTASPEC_MAX_EXACT_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("HEPTASPEC_MAX_EXACT_N is not an integer: ") + env);
    }
  }
  return kDefaultMaxExactN;
}

bool VerificationReport::passed() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const ReportEntry& e) { return e.skipped || e.erratum || e.match; });
}

const ReportEntry* VerificationReport::find(const std::string& quantity) const {
  for (const auto& e : entries)
    if (e.quantity == quantity) return &e;
  return nullptr;
}

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["deep"] = deep;
  j["passed"] = passed();
  auto& arr = j["entries"] = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json je;
    je["quantity"] = e.quantity;
    je["closed_form_value"] = e.closed_form_value;
    je["oracle_value"] = e.oracle_value;
    je["match"] = e.match;
    je["relative_deviation"] = std::isfinite(e.relative_deviation)
                                   ? nlohmann::json(e.relative_deviation)
                                   : nlohmann::json(nullptr);
    je["erratum"] = e.erratum;
    je["skipped"] = e.skipped;
    je["note"] = e.note;
    arr.push_back(std::move(je));
  }
  return j.dump(2);
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << "verify n=" << n << (deep ? " (deep)" : "") << '\n';
  for (const auto& e : entries) {
    std::string status = e.skipped ? "SKIPPED" : e.match ? "match" : e.erratum ? "MISMATCH (erratum)" : "MISMATCH";
    os << "  " << std::left << std::setw(24) << e.quantity << std::setw(20) << status
       << "closed=" << e.closed_form_value << "  oracle=" << e.oracle_value;
    if (!e.skipped && !e.match && e.relative_deviation > 0) os << "  rel.dev=" << std::setprecision(6) << e.relative_deviation;
    os << '\n';
    if (!e.note.empty()) os << "      " << e.note << '\n';
  }
  os << (passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

VerificationReport verify(int n, const VerifyOptions& options) {
  if (n < 1) throw std::domain_error("verify requires n >= 1");
  VerificationReport report;
  report.n = n;
  report.deep = options.deep;

  const bool exact = n <= options.max_exact_n;
  const bool deep = options.deep && exact;
  const bool numeric = n <= kNumericMaxN;
  const std::string guard = "n exceeds max-exact-n=" + std::to_string(options.max_exact_n);

  const HeptagonalChain chain = build_chain(n);
  const BlockLaplacian blocks = extract_blocks(chain);
  const DecomposedPair pair = decompose(blocks);
  const IntMatrix la_int = integerized_la(pair);
  const IntMatrix& ls = pair.ls;
  const IntMatrix printed = printed_ls(n);
  const auto k5n = static_cast<std::size_t>(5 * n);

  std::optional<SpectralSummary> spec_a, spec_s, spec_l;
  if (numeric) {
    spec_a = numeric_spectrum(pair.la);
    spec_s = numeric_spectrum(ls);
    spec_l = numeric_spectrum(laplacian(chain));
  }
  // Product of the nonzero eigenvalues of L_A and its reciprocal sum.
  double alpha_prod = 1;
  if (spec_a)
    for (double a : spec_a->eigenvalues)
      if (std::abs(a) > kZeroEigenTol) alpha_prod *= a;

  std::optional<CharPoly> cp_a;
  if (deep) cp_a = charpoly(la_int);

  auto add = [&report](ReportEntry e, bool erratum = false) {
    e.erratum = erratum;
    report.entries.push_back(std::move(e));
  };

  // a_5n
  {
    const Rational closed = a5n_closed(n);
    if (cp_a)
      add(exact_entry(Quantity::A5n, closed, cp_a->minor_sum(k5n)));
    else if (spec_a)
      add(float_entry(Quantity::A5n, closed, alpha_prod));
    else
      add(skipped_entry(Quantity::A5n, closed, guard));
  }
  // a_5n-1 and the reciprocal eigenvalue sum of L_A
  {
    const Rational closed = a5n_minus1_closed(n);
    ReportEntry e = cp_a ? exact_entry(Quantity::A5nMinus1, closed, cp_a->minor_sum(k5n - 1))
                    : spec_a ? float_entry(Quantity::A5nMinus1, closed,
                                           alpha_prod * spec_a->reciprocal_sum_nonzero)
                             : skipped_entry(Quantity::A5nMinus1, closed, guard);
    if (!is_integer(closed))
      e.note = "published value is not an integer, but every e_k of the integer matrix D L_A D^-1 is";
    add(std::move(e), true);

    const Rational closed_ratio = sum_inv_alpha_closed(n);
    if (cp_a)
      add(exact_entry(Quantity::SumInvAlpha, closed_ratio,
                      cp_a->minor_sum(k5n - 1) / cp_a->minor_sum(k5n)),
          true);
    else if (spec_a)
      add(float_entry(Quantity::SumInvAlpha, closed_ratio, spec_a->reciprocal_sum_nonzero), true);
    else
      add(skipped_entry(Quantity::SumInvAlpha, closed_ratio, guard), true);
  }

  // L_S quantities: exact oracles are cheap (tridiagonal), gated only by max-exact-n.
  const auto m4n = static_cast<std::size_t>(4 * n);
  const Rational closed_m = m_closed(4 * n);
  const Rational closed_det = det_ls_closed(n);
  const Rational closed_b = b4n_closed(n);
  const Rational closed_beta = closed_b / closed_det;
  if (exact) {
    const Integer det_true = determinant(ls);
    const Integer b_true = second_minor_sum(ls);
    const Integer det_printed = determinant(printed);

    ReportEntry em = exact_entry(Quantity::MSequence, closed_m,
                                 Rational(leading_principal_minors_fast(ls)[m4n - 1]));
    if (!em.match) em.note = printed_ls_note(closed_m, Rational(leading_principal_minors_fast(printed)[m4n - 1]));
    add(std::move(em));

    ReportEntry ed = exact_entry(Quantity::DetLS, closed_det, Rational(det_true));
    if (!ed.match) ed.note = printed_ls_note(closed_det, Rational(det_printed));
    add(std::move(ed));

    ReportEntry eb = exact_entry(Quantity::B4n, closed_b, Rational(b_true));
    if (deep) {
      const Rational via_charpoly = charpoly(ls).minor_sum(m4n);
      if (via_charpoly != Rational(b_true)) throw std::logic_error("e_4n(L_S): adjugate and charpoly disagree");
    }
    if (!eb.match) eb.note = printed_ls_note(closed_b, Rational(second_minor_sum(printed)));
    add(std::move(eb));

    ReportEntry es = exact_entry(Quantity::SumInvBeta, closed_beta, make_rational(b_true, det_true));
    if (!es.match)
      es.note = printed_ls_note(closed_beta, make_rational(second_minor_sum(printed), det_printed));
    add(std::move(es));
  } else {
    for (auto [q, v] : {std::pair{Quantity::MSequence, closed_m}, std::pair{Quantity::DetLS, closed_det},
                        std::pair{Quantity::B4n, closed_b}, std::pair{Quantity::SumInvBeta, closed_beta}})
      add(skipped_entry(q, v, guard));
  }

  // Kirchhoff index, both prefactors against one oracle.
  {
    const Rational kf9 = kf_closed(n);
    const Rational kf20 = kf_closed_twenty(n);
    if (exact) {
      const Rational kf_true = kirchhoff_resistance(chain);
      ReportEntry e9 = exact_entry(Quantity::KfVertexFactor, kf9, kf_true);
      e9.note = "closed " + to_decimal(kf9, 2) + " vs exact resistance " + to_decimal(kf_true, 2);
      add(std::move(e9), true);
      ReportEntry e20 = exact_entry(Quantity::KfTwentyFactor, kf20, kf_true);
      e20.note = "closed " + to_decimal(kf20, 2) + " vs exact resistance " + to_decimal(kf_true, 2);
      add(std::move(e20), true);
    } else if (spec_l) {
      const double kf_float = static_cast<double>(chain.num_vertices()) * spec_l->reciprocal_sum_nonzero;
      add(float_entry(Quantity::KfVertexFactor, kf9, kf_float), true);
      add(float_entry(Quantity::KfTwentyFactor, kf20, kf_float), true);
    } else {
      add(skipped_entry(Quantity::KfVertexFactor, kf9, guard), true);
      add(skipped_entry(Quantity::KfTwentyFactor, kf20, guard), true);
    }
  }

  // Spanning trees.
  {
    const Rational tau = Rational(tau_closed(n));
    if (exact) {
      ReportEntry e = exact_entry(Quantity::Tau, tau, Rational(spanning_trees_matrix_tree(chain)));
      if (!e.match) {
        const Rational printed_tau = pow2(n - 1) * Rational(determinant(printed));
        e.note = "matrix-tree count on H_n; closed form equals 2^(n-1)*det(printed L_S) = " +
                 printed_tau.get_str() + (printed_tau == tau ? "" : " (differs)");
      }
      add(std::move(e));
    } else {
      add(skipped_entry(Quantity::Tau, tau, guard));
    }
  }

  // Spectrum of L(H_n) is the union of those of L_A and L_S.
  {
    ReportEntry e;
    e.quantity = "spectrum_union";
    if (spec_l) {
      const double gap = spectrum_union_gap(spec_l->eigenvalues, spec_a->eigenvalues, spec_s->eigenvalues);
      e.match = gap <= 1e-8;
      e.relative_deviation = gap;
      e.closed_form_value = "eig(L_A) + eig(L_S)";
      e.oracle_value = "eig(L)";
      e.note = "max paired gap " + fmt_double(gap) + ", window 1e-8";
      if (deep && n <= kDeepFullCharpolyMaxN) {
        const bool exact_ok = charpoly(laplacian(chain)) == *cp_a * charpoly(ls);
        e.match = e.match && exact_ok;
        e.note += exact_ok ? "; exact charpoly(L) = charpoly(L_A)*charpoly(L_S)" : "; exact charpoly product FAILED";
      }
    } else {
      e.skipped = true;
      e.oracle_value = "skipped";
      e.note = "n above numeric cap";
    }
    report.entries.push_back(std::move(e));
  }

  // The m_s closed form against its own recurrence, s up to 4n.
  {
    ReportEntry e;
    e.quantity = "m_closed_vs_recurrence";
    int bad = 0;
    for (int s = 1; s <= 4 * n; ++s)
      if (m_closed(s) != m_recurrence(s)) ++bad;
    e.match = bad == 0;
    e.closed_form_value = "m_closed(1.." + std::to_string(4 * n) + ")";
    e.oracle_value = "m_recurrence";
    e.note = std::to_string(bad) + " disagreements";
    report.entries.push_back(std::move(e));
  }

  if (deep) {
    ReportEntry e;
    e.quantity = "minor_formulas";
    const MinorAudit audit = audit_minor_formulas(pair);
    e.match = audit.mismatches == 0;
    e.erratum = true;
    e.closed_form_value = "deleted-minor case formulas";
    e.oracle_value = "exact deleted minors of D L_A D^-1";
    e.note = std::to_string(audit.matches) + " match, " + std::to_string(audit.mismatches) + " mismatch, " +
             std::to_string(audit.uncovered) + " uncovered";
    report.entries.push_back(std::move(e));

    ReportEntry integral;
    integral.quantity = "la_integrality";
    integral.match = std::all_of(cp_a->coefficients.begin(), cp_a->coefficients.end(),
                                 [](const Rational& c) { return is_integer(c); });
    integral.closed_form_value = "all e_k(L_A) integral";
    integral.oracle_value = integral.match ? "yes" : "no";
    report.entries.push_back(std::move(integral));
  }
  return report;
}

std::optional<TableKind> parse_table_kind(const std::string& s) {
  if (s == "kirchhoff") return TableKind::Kirchhoff;
  if (s == "complexity") return TableKind::Complexity;
  return std::nullopt;
}

std::optional<TableFormat> parse_table_format(const std::string& s) {
  if (s == "csv") return TableFormat::Csv;
  if (s == "json") return TableFormat::Json;
  if (s == "md") return TableFormat::Markdown;
  return std::nullopt;
}

std::vector<TableRow> table_rows(TableKind kind, int from, int to, int max_exact_n) {
  if (from < 1 || to < from) throw std::invalid_argument("table range must satisfy 1 <= from <= to");
  auto row_for = [kind, max_exact_n](int n) {
    TableRow row;
    row.n = n;
    if (kind == TableKind::Kirchhoff) {
      row.kf_closed = to_decimal(kf_closed(n), 2);
      row.kf_oracle = n <= max_exact_n ? to_decimal(kirchhoff_resistance(build_chain(n)), 2) : kSkippedSize;
    } else {
      row.tau_closed = tau_closed(n).get_str();
      row.tau_oracle = n <= max_exact_n ? spanning_trees_matrix_tree(build_chain(n)).get_str() : kSkippedSize;
    }
    return row;
  };

  std::vector<TableRow> rows;
  const unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  for (int start = from; start <= to; start += static_cast<int>(workers)) {
    std::vector<std::future<TableRow>> batch;
    for (int n = start; n <= to && n < start + static_cast<int>(workers); ++n)
      batch.push_back(std::async(std::launch::async, row_for, n));
    for (auto& f : batch) rows.push_back(f.get());
  }
  return rows;
}

std::string render_table(TableKind kind, const std::vector<TableRow>& rows, TableFormat format) {
  const bool kf = kind == TableKind::Kirchhoff;
  auto closed = [kf](const TableRow& r) -> const std::string& { return kf ? r.kf_closed : r.tau_closed; };
  auto oracle = [kf](const TableRow& r) -> const std::string& { return kf ? r.kf_oracle : r.tau_oracle; };
  const std::string closed_key = kf ? "kf_closed" : "tau_closed";
  const std::string oracle_key = kf ? "kf_oracle" : "tau_oracle";

  std::ostringstream os;
  switch (format) {
    case TableFormat::Csv:
      os << "n," << closed_key << ',' << oracle_key << '\n';
      for (const auto& r : rows) os << r.n << ',' << closed(r) << ',' << oracle(r) << '\n';
      break;
    case TableFormat::Json: {
      nlohmann::json j;
      j["kind"] = kf ? "kirchhoff" : "complexity";
      auto& arr = j["rows"] = nlohmann::json::array();
      for (const auto& r : rows) arr.push_back({{"n", r.n}, {closed_key, closed(r)}, {oracle_key, oracle(r)}});
      os << j.dump(2) << '\n';
      break;
    }
    case TableFormat::Markdown:
      os << "| n | " << (kf ? "Kf (closed form)" : "tau (closed form)") << " | "
         << (kf ? "Kf (exact resistance)" : "tau (matrix-tree)") << " |\n";
      os << "|---:|---:|---:|\n";
      for (const auto& r : rows) os << "| " << r.n << " | " << closed(r) << " | " << oracle(r) << " |\n";
      break;
  }
  return os.str();
}

std::vector<TableRow> parse_table_json(const std::string& json) {
  const nlohmann::json j = nlohmann::json::parse(json);
  std::vector<TableRow> rows;
  for (const auto& jr : j.at("rows")) {
    TableRow r;
    r.n = jr.at("n").get<int>();
    r.kf_closed = jr.value("kf_closed", "");
    r.kf_oracle = jr.value("kf_oracle", "");
    r.tau_closed = jr.value("tau_closed", "");
    r.tau_oracle = jr.value("tau_oracle", "");
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace heptaspec
