#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heptaspec/closed_forms.hpp"

namespace heptaspec {

inline constexpr int kDefaultMaxExactN = 30;

/// Resolves the exact-computation cutoff: explicit flag, then the
/// HEPTASPEC_MAX_EXACT_N environment variable, then the default.
int resolve_max_exact_n(std::optional<int> flag);

struct ReportEntry {
  std::string quantity;
  std::string closed_form_value;  // exact string
  std::string oracle_value;       // exact string or decimal
  bool match = false;
  double relative_deviation = 0;
  std::string note;
  bool erratum = false;  // mismatch is a known misprint and does not fail verify
  bool skipped = false;  // oracle not run (resource guard)
};

struct VerificationReport {
  int n = 0;
  bool deep = false;
  std::vector<ReportEntry> entries;

  /// True iff every non-skipped, non-erratum entry matches.
  bool passed() const;
  const ReportEntry* find(const std::string& quantity) const;

  std::string to_json() const;
  std::string summary() const;
};

struct VerifyOptions {
  bool deep = false;
  int max_exact_n = kDefaultMaxExactN;
};

/// Runs every closed-form audit at n against the oracles.
VerificationReport verify(int n, const VerifyOptions& options = {});

enum class TableKind { Kirchhoff, Complexity };
enum class TableFormat { Csv, Json, Markdown };

std::optional<TableKind> parse_table_kind(const std::string& s);
std::optional<TableFormat> parse_table_format(const std::string& s);

struct TableRow {
  int n = 0;
  std::string kf_closed;   // 2 decimals, half-even
  std::string kf_oracle;   // 2 decimals or "skipped (size)"
  std::string tau_closed;  // integer
  std::string tau_oracle;  // integer or "skipped (size)"

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

inline constexpr const char* kSkippedSize = "skipped (size)";

/// Rows for n in [from, to]; only the columns of `kind` are filled.
/// Rows are computed in parallel and returned in order.
std::vector<TableRow> table_rows(TableKind kind, int from, int to, int max_exact_n);

std::string render_table(TableKind kind, const std::vector<TableRow>& rows, TableFormat format);

/// Inverse of render_table(kind, rows, TableFormat::Json).
std::vector<TableRow> parse_table_json(const std::string& json);

}  // namespace heptaspec
