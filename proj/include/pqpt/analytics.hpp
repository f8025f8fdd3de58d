#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pqpt/finding.hpp"
#include "pqpt/types.hpp"

namespace pqpt {

// Money is carried as exact integer cents; display formatting happens only
// at the report boundary.
using Cents = std::int64_t;

struct CostRecord {
  std::string methodology_label;
  Cents setup_cost = 0;
  Cents monthly_op_cost = 0;
  std::uint32_t months = 1;
  Cents remediation_cost = 0;
  std::uint64_t detected = 0;
  std::uint64_t resolved = 0;
  double avg_days_to_resolve = 1.0;  // > 0
};

struct CostDerived {
  std::string methodology_label;
  Cents total_cost = 0;  // setup + months*monthly + remediation, exact
  std::optional<double> cost_per_detected;  // empty when detected = 0
  std::optional<double> cost_per_resolved;  // empty when resolved = 0
  double efficiency = 0.0;                  // resolved / avg_days_to_resolve
  bool resolved_exceeds_detected = false;   // warning flag, never an error
};

struct SeveritySummary {
  std::string label;
  std::uint64_t total = 0;
  std::uint64_t critical = 0;
  std::uint64_t high = 0;
  std::uint64_t medium = 0;
  std::uint64_t low = 0;
};

CostDerived derive_costs(const CostRecord& record);  // InvalidArgumentError

// The five built-in cost rows of the reference study, months = 6 each.
std::vector<CostRecord> paper_cost_records();

// Counts by severity, grouped by reporting label with Dast and Sast merged
// under "DAST & SAST"; groups appear in fixed label order, absent groups
// are omitted.
std::vector<SeveritySummary> severity_summary(const std::vector<FindingSet>& sets);

double resolution_rate(const FindingSet& set, VulnCategory category);  // NoSuchCategoryInSetError

// Fraction of all findings with resolved_at - detected_at <= window_days.
double remediation_sla(const FindingSet& set, std::uint32_t window_days);  // EmptySetError

enum class ReportFormat : std::uint8_t { Csv, Json };

struct ResolutionMetrics {
  std::map<VulnCategory, double> rates;
  std::uint32_t sla_window_days = 14;
  std::optional<double> sla;
};

// CSV: the cost table only, header
// `methodology,total_cost,cost_per_detected,cost_per_resolved,efficiency`,
// numbers at 6 decimal places, undefined metrics as the literal `undefined`.
// JSON: object with keys severity_summaries, cost_effectiveness,
// resolution_rates, sla; undefined metrics as null.
std::string emit_report(const std::vector<SeveritySummary>& summaries,
                        const std::vector<CostDerived>& derived,
                        const ResolutionMetrics& metrics, ReportFormat format);

}  // namespace pqpt
