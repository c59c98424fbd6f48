#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gme/convex_roof.hpp"
#include "gme/pure_gm.hpp"
#include "gme/state_io.hpp"

namespace gme {

enum class CertificateKind { exact, lower_bound, upper_bound, bracket };
enum class OutputFormat { text, machine };

std::string to_string(CertificateKind kind);
/// 12 significant digits; "inf" and "nan" spelled out.
std::string format_number(double x);

/// Witness object from which an entry can be recomputed.
struct Certificate {
  std::optional<ProductState> product;
  std::optional<Decomposition> decomposition;
  std::vector<ProductState> member_products;
  std::optional<DensityMatrix> separable;
};

struct MeasureEntry {
  std::string name;
  double value = 0.0;
  /// Upper end of a bracket; `value` is then the lower end.
  std::optional<double> upper;
  CertificateKind kind = CertificateKind::exact;
  /// "closed form (...)", "optimizer", "singular value decomposition", ...
  std::string provenance;
  /// Short description of the stored witness; empty when none is needed.
  std::string certificate;
  /// Value recomputed from the stored witness.
  std::optional<double> recomputed;
  /// Optimizer value kept alongside a closed-form override.
  std::optional<double> optimizer_value;
};

struct HierarchyCheck {
  std::string relation;
  std::string lhs_name;
  std::string rhs_name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool ok = true;
};

struct ReportOptions {
  /// The logarithmic roof is the most expensive item; suites may skip it when no closed form exists.
  bool log_roof = true;
};

struct MeasureReport {
  std::vector<int> dims;
  std::string kind;
  double purity = 1.0;
  std::vector<MeasureEntry> entries;
  std::vector<HierarchyCheck> checks;
  std::map<std::string, Certificate> certificates;

  [[nodiscard]] bool hierarchy_ok() const;
  [[nodiscard]] const MeasureEntry* find(const std::string& name) const;
  /// Largest |recomputed - value| over entries with a witness (0 when none).
  [[nodiscard]] double max_recomputation_error() const;
};

inline constexpr double kHierarchySlack = 5e-6;
inline constexpr double kIdentitySlack = 1e-9;

MeasureReport build_report(const AnyState& state, const OptimizerOptions& opts = {}, const ReportOptions& ropts = {});
std::string render_report(const MeasureReport& report, OutputFormat format);
/// Text block listing the witnesses of both sides of every failed check.
std::string render_violations(const MeasureReport& report);
/// Writes one file per certificate into `directory` (created if missing).
void dump_certificates(const MeasureReport& report, const std::string& directory);

}  // namespace gme
