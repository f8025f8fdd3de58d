#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pqpt/analytics.hpp"
#include "pqpt/finding.hpp"
#include "pqpt/ledger.hpp"
#include "pqpt/redteam.hpp"
#include "pqpt/scanners.hpp"

namespace pqpt {

enum class Phase : std::uint8_t { Setup = 0, Assessment, Remediation, Validation, Iteration };

enum class PipelineEvent : std::uint8_t { PhaseComplete = 0, ValidationFailed, Halt };

std::string_view to_string(Phase p);

struct PipelineState {
  Phase phase = Phase::Setup;
  std::uint32_t cycle = 0;  // increments exactly on Iteration -> Assessment
  FindingSet open_findings;
  std::shared_ptr<Ledger> ledger;
  Day clock = 0;  // monotone non-decreasing
  bool halted = false;
};

// Pure transition function. PhaseComplete walks Setup -> Assessment ->
// Remediation -> Validation -> Iteration and wraps Iteration back to
// Assessment with cycle + 1; ValidationFailed (legal only in Validation)
// returns to Remediation; Halt is terminal from anywhere. Every other pair
// raises IllegalEventError and the caller's state is untouched.
PipelineState advance(const PipelineState& state, PipelineEvent event);

// Per-category target resolution rates. Rates are exact basis points
// (1/10000) so target counts round identically on every platform; rounding
// is half away from zero. sla_target is the fraction of each methodology
// group resolved within sla_window_days.
struct RemediationPolicy {
  std::map<VulnCategory, std::uint32_t> category_rate_bp;
  std::uint32_t default_rate_bp = 7000;
  std::uint32_t sla_window_days = 14;
  std::uint32_t sla_target_bp = 7000;

  std::uint32_t rate_bp(VulnCategory c) const;

  // Built-in targets: SQLI/XSS/InsecureDataHandling 0.80, EncryptionFlaw
  // 0.8333, AdversarialMl 0.875, everything else 0.70 within 14 days.
  static RemediationPolicy paper_default();
};

struct PipelineConfig {
  std::uint64_t master_seed = 42;
  std::vector<ScanProfile> scan_profiles;
  std::vector<ScenarioConfig> scenario_configs;
  RemediationPolicy remediation_policy;
  std::string crypto_params_id = "STD-256";
  std::uint32_t max_cycles = 1;
  bool encrypt_ledger_payloads = false;

  static PipelineConfig paper_default();
  static PipelineConfig from_json(const nlohmann::json& j);  // ConfigInvalidError
  nlohmann::json to_json() const;
};

struct PipelineRunReport {
  std::vector<SeveritySummary> severity_summaries;
  std::vector<CostDerived> cost_table;
  SimulationReport simulation;
  std::shared_ptr<Ledger> ledger;
  VerificationOutcome verification;
  FindingSet findings;  // final state, resolutions applied
  ResolutionMetrics resolution_metrics;
  std::vector<VulnCategory> unmet_targets;  // after bounded retries
  PipelineState final_state;
  std::uint32_t iteration_wraps = 0;
};

// Exported artifacts; byte-identical for identical configs.
struct RunArtifacts {
  std::string ledger_jsonl;
  std::string report_csv;
  std::string report_json;
};
RunArtifacts make_artifacts(const PipelineRunReport& report);

PipelineRunReport run_pipeline(const PipelineConfig& config);  // ConfigInvalidError / LedgerCorruptError

// Canned composition reproducing the reference study outputs: scanner
// severity tables, the 500-event audit ledger, the published resolution
// rates and SLA, the red-team success rates, and the cost table.
PipelineRunReport replay_paper_scenario();

}  // namespace pqpt
