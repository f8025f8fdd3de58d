#include "pqpt/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pqpt/attack.hpp"
#include "pqpt/errors.hpp"
#include "pqpt/prng.hpp"
#include "pqpt/rlwe.hpp"

namespace pqpt {

namespace {

// Half-away-from-zero rounding of (bp/10000) * count in pure integers.
std::uint64_t round_bp(std::uint64_t bp, std::uint64_t count) {
  return (bp * count + 5000) / 10000;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// One remediation pass: per (methodology, category), top the resolved count
// up to round_bp(rate, count), picking the earliest open findings in set
// order. Resolution days are shaped per methodology group so that
// round_bp(sla_target, group size) resolutions land within the SLA window
// and the rest land beyond it. Returns newly resolved indices in draw order.
std::vector<std::size_t> apply_remediation(FindingSet& set,
                                           const RemediationPolicy& policy,
                                           Prng& stream) {
  std::vector<std::size_t> newly;
  const std::uint32_t window = policy.sla_window_days;
  for (int m = 0; m < kMethodologyCount; ++m) {
    std::vector<std::size_t> group;
    for (std::size_t i = 0; i < set.findings.size(); ++i) {
      if (set.findings[i].methodology == static_cast<Methodology>(m)) group.push_back(i);
    }
    if (group.empty()) continue;

    std::map<VulnCategory, std::uint64_t> remaining;
    {
      std::map<VulnCategory, std::uint64_t> count;
      std::map<VulnCategory, std::uint64_t> resolved;
      for (std::size_t i : group) {
        const Finding& f = set.findings[i];
        ++count[f.category];
        if (f.resolved()) ++resolved[f.category];
      }
      for (const auto& [category, total] : count) {
        std::uint64_t required = round_bp(policy.rate_bp(category), total);
        std::uint64_t have = resolved[category];
        remaining[category] = required > have ? required - have : 0;
      }
    }

    std::vector<bool> is_new(set.findings.size(), false);
    std::vector<std::size_t> group_new;
    for (std::size_t i : group) {
      const Finding& f = set.findings[i];
      if (f.resolved()) continue;
      std::uint64_t& quota = remaining[f.category];
      if (quota == 0) continue;
      --quota;
      is_new[i] = true;
      group_new.push_back(i);
    }
    if (group_new.empty()) continue;

    const std::uint64_t within_target = round_bp(policy.sla_target_bp, group.size());
    std::uint64_t rank = 0;  // position among the group's resolved findings
    for (std::size_t i : group) {
      Finding& f = set.findings[i];
      if (!f.resolved() && !is_new[i]) continue;
      if (is_new[i]) {
        std::uint64_t delay = rank < within_target
                                  ? stream.next_below(window + 1)
                                  : window + 1 + stream.next_below(window);
        f.resolved_at = f.detected_at + static_cast<Day>(delay);
      }
      ++rank;
    }
    newly.insert(newly.end(), group_new.begin(), group_new.end());
  }
  return newly;
}

// Set-wide target check: a category misses when its resolved count is below
// round_bp(rate, count) over the whole set.
std::vector<VulnCategory> unmet_categories(const FindingSet& set,
                                           const RemediationPolicy& policy) {
  std::map<VulnCategory, std::pair<std::uint64_t, std::uint64_t>> stats;
  for (const Finding& f : set.findings) {
    auto& [count, resolved] = stats[f.category];
    ++count;
    if (f.resolved()) ++resolved;
  }
  std::vector<VulnCategory> unmet;
  for (const auto& [category, counts] : stats) {
    if (counts.second < round_bp(policy.rate_bp(category), counts.first)) {
      unmet.push_back(category);
    }
  }
  return unmet;
}

void validate_config(const PipelineConfig& config) {
  if (config.max_cycles == 0) throw ConfigInvalidError("max_cycles must be >= 1");
  const RlweParams* params;
  try {
    params = &RlweParams::by_id(config.crypto_params_id);
  } catch (const UnregisteredParamsError& e) {
    throw ConfigInvalidError(e.what());
  }
  if (config.encrypt_ledger_payloads && !params->correct) {
    throw ConfigInvalidError("encrypt_ledger_payloads needs a correct parameter set, got " +
                             config.crypto_params_id);
  }
  for (const ScenarioConfig& s : config.scenario_configs) {
    if (s.success_prob < 0.0 || s.success_prob > 1.0) {
      throw ConfigInvalidError("scenario success_prob outside [0, 1]");
    }
    if (s.trials == 0) throw ConfigInvalidError("scenario trials must be >= 1");
    if (s.mean_detection_delay_days < 0.0) {
      throw ConfigInvalidError("scenario mean_detection_delay_days must be non-negative");
    }
  }
  const RemediationPolicy& policy = config.remediation_policy;
  if (policy.sla_window_days == 0) throw ConfigInvalidError("sla_window_days must be >= 1");
  if (policy.default_rate_bp > 10000 || policy.sla_target_bp > 10000) {
    throw ConfigInvalidError("policy rates are basis points in [0, 10000]");
  }
  for (const auto& [category, bp] : policy.category_rate_bp) {
    (void)category;
    if (bp > 10000) throw ConfigInvalidError("policy rates are basis points in [0, 10000]");
  }
}

ResolutionMetrics compute_metrics(const FindingSet& set, const RemediationPolicy& policy) {
  ResolutionMetrics metrics;
  metrics.sla_window_days = policy.sla_window_days;
  std::map<VulnCategory, bool> present;
  for (const Finding& f : set.findings) present[f.category] = true;
  for (const auto& [category, flag] : present) {
    (void)flag;
    metrics.rates[category] = resolution_rate(set, category);
  }
  if (!set.findings.empty()) {
    metrics.sla = remediation_sla(set, policy.sla_window_days);
  }
  return metrics;
}

std::string remediation_payload(const Finding& f) {
  nlohmann::json j{{"finding_id", f.id}, {"resolved_at", *f.resolved_at}};
  return j.dump();
}

}  // namespace

std::string_view to_string(Phase p) {
  switch (p) {
    case Phase::Setup: return "SETUP";
    case Phase::Assessment: return "ASSESSMENT";
    case Phase::Remediation: return "REMEDIATION";
    case Phase::Validation: return "VALIDATION";
    case Phase::Iteration: return "ITERATION";
  }
  return "";
}

PipelineState advance(const PipelineState& state, PipelineEvent event) {
  if (state.halted) throw IllegalEventError("pipeline already halted");
  PipelineState next = state;
  switch (event) {
    case PipelineEvent::Halt:
      next.halted = true;
      return next;
    case PipelineEvent::ValidationFailed:
      if (state.phase != Phase::Validation) {
        throw IllegalEventError("ValidationFailed is legal only in VALIDATION, got " +
                                std::string(to_string(state.phase)));
      }
      next.phase = Phase::Remediation;
      return next;
    case PipelineEvent::PhaseComplete:
      switch (state.phase) {
        case Phase::Setup: next.phase = Phase::Assessment; break;
        case Phase::Assessment: next.phase = Phase::Remediation; break;
        case Phase::Remediation: next.phase = Phase::Validation; break;
        case Phase::Validation: next.phase = Phase::Iteration; break;
        case Phase::Iteration:
          next.phase = Phase::Assessment;
          next.cycle += 1;
          break;
      }
      return next;
  }
  throw IllegalEventError("unknown pipeline event");
}

std::uint32_t RemediationPolicy::rate_bp(VulnCategory c) const {
  auto it = category_rate_bp.find(c);
  return it == category_rate_bp.end() ? default_rate_bp : it->second;
}

RemediationPolicy RemediationPolicy::paper_default() {
  RemediationPolicy policy;
  policy.category_rate_bp = {
      {VulnCategory::SqlInjection, 8000},
      {VulnCategory::Xss, 8000},
      {VulnCategory::InsecureDataHandling, 8000},
      {VulnCategory::EncryptionFlaw, 8333},
      {VulnCategory::AdversarialMl, 8750},
  };
  policy.default_rate_bp = 7000;
  policy.sla_window_days = 14;
  policy.sla_target_bp = 7000;
  return policy;
}

PipelineConfig PipelineConfig::paper_default() {
  PipelineConfig config;
  config.master_seed = 42;
  config.scan_profiles = {paper_profile(Methodology::Dast), paper_profile(Methodology::Sast),
                          paper_profile(Methodology::Iast)};
  config.scenario_configs = paper_scenarios();
  config.remediation_policy = RemediationPolicy::paper_default();
  config.crypto_params_id = "STD-256";
  config.max_cycles = 1;
  config.encrypt_ledger_payloads = true;
  return config;
}

PipelineConfig PipelineConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigInvalidError("config document must be a JSON object");
  static const char* known[] = {"master_seed",       "scan_profiles",
                                "scenario_configs",  "remediation_policy",
                                "crypto_params_id",  "max_cycles",
                                "encrypt_ledger_payloads"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ConfigInvalidError("unknown config key: " + key);
  }
  PipelineConfig config;
  try {
    if (j.contains("master_seed")) config.master_seed = j.at("master_seed").get<std::uint64_t>();
    if (j.contains("scan_profiles")) {
      for (const auto& p : j.at("scan_profiles")) {
        Methodology m = methodology_from_string(p.at("methodology").get<std::string>());
        std::map<VulnCategory, std::uint32_t> counts;
        for (const auto& [name, count] : p.at("category_counts").items()) {
          counts[category_from_string(name)] = count.get<std::uint32_t>();
        }
        config.scan_profiles.push_back(make_scan_profile(
            m, std::move(counts), p.at("detection_window_days").get<std::uint32_t>()));
      }
    }
    if (j.contains("scenario_configs")) {
      for (const auto& s : j.at("scenario_configs")) {
        ScenarioConfig sc;
        sc.attack_type = attack_type_from_string(s.at("attack_type").get<std::string>());
        sc.success_prob = s.at("success_prob").get<double>();
        sc.trials = s.at("trials").get<std::uint64_t>();
        if (s.contains("mean_detection_delay_days")) {
          sc.mean_detection_delay_days = s.at("mean_detection_delay_days").get<double>();
        }
        config.scenario_configs.push_back(sc);
      }
    }
    if (j.contains("remediation_policy")) {
      const auto& p = j.at("remediation_policy");
      RemediationPolicy& policy = config.remediation_policy;
      if (p.contains("category_rate_bp")) {
        for (const auto& [name, bp] : p.at("category_rate_bp").items()) {
          policy.category_rate_bp[category_from_string(name)] = bp.get<std::uint32_t>();
        }
      }
      if (p.contains("default_rate_bp")) {
        policy.default_rate_bp = p.at("default_rate_bp").get<std::uint32_t>();
      }
      if (p.contains("sla_window_days")) {
        policy.sla_window_days = p.at("sla_window_days").get<std::uint32_t>();
      }
      if (p.contains("sla_target_bp")) {
        policy.sla_target_bp = p.at("sla_target_bp").get<std::uint32_t>();
      }
    }
    if (j.contains("crypto_params_id")) {
      config.crypto_params_id = j.at("crypto_params_id").get<std::string>();
    }
    if (j.contains("max_cycles")) config.max_cycles = j.at("max_cycles").get<std::uint32_t>();
    if (j.contains("encrypt_ledger_payloads")) {
      config.encrypt_ledger_payloads = j.at("encrypt_ledger_payloads").get<bool>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigInvalidError(std::string("malformed config: ") + e.what());
  } catch (const ConfigInvalidError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigInvalidError(std::string("invalid config value: ") + e.what());
  }
  validate_config(config);
  return config;
}

nlohmann::json PipelineConfig::to_json() const {
  nlohmann::json j;
  j["master_seed"] = master_seed;
  j["scan_profiles"] = nlohmann::json::array();
  for (const ScanProfile& p : scan_profiles) {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [category, count] : p.category_counts) {
      counts[std::string(to_string(category))] = count;
    }
    j["scan_profiles"].push_back({{"methodology", std::string(to_string(p.methodology))},
                                  {"category_counts", std::move(counts)},
                                  {"detection_window_days", p.detection_window_days}});
  }
  j["scenario_configs"] = nlohmann::json::array();
  for (const ScenarioConfig& s : scenario_configs) {
    j["scenario_configs"].push_back(
        {{"attack_type", std::string(to_string(s.attack_type))},
         {"success_prob", s.success_prob},
         {"trials", s.trials},
         {"mean_detection_delay_days", s.mean_detection_delay_days}});
  }
  nlohmann::json rates = nlohmann::json::object();
  for (const auto& [category, bp] : remediation_policy.category_rate_bp) {
    rates[std::string(to_string(category))] = bp;
  }
  j["remediation_policy"] = {{"category_rate_bp", std::move(rates)},
                             {"default_rate_bp", remediation_policy.default_rate_bp},
                             {"sla_window_days", remediation_policy.sla_window_days},
                             {"sla_target_bp", remediation_policy.sla_target_bp}};
  j["crypto_params_id"] = crypto_params_id;
  j["max_cycles"] = max_cycles;
  j["encrypt_ledger_payloads"] = encrypt_ledger_payloads;
  return j;
}

PipelineRunReport run_pipeline(const PipelineConfig& config) {
  validate_config(config);
  const RlweParams& params = RlweParams::by_id(config.crypto_params_id);

  PipelineRunReport report;
  report.simulation.master_seed = config.master_seed;

  PipelineState state;
  state.ledger = std::make_shared<Ledger>();

  Day clock = 0;
  auto log = [&](Day day, EventType type, std::string payload, bool encrypted) {
    if (day > clock) clock = day;  // timestamps clamp to the running maximum
    state.ledger->append(clock, type, std::move(payload), encrypted);
    state.clock = clock;
  };

  Prng keygen_stream = derive_stream(config.master_seed, "crypto/keygen");
  RlweKeyPair keypair = keygen(params, keygen_stream);
  Prng crypto_stream = derive_stream(config.master_seed, "crypto/ledger");
  Prng remediation_stream = derive_stream(config.master_seed, "remediation");

  std::map<Methodology, Prng> scan_streams;
  std::map<Methodology, std::uint32_t> scan_seq;

  log(0, EventType::SystemChange,
      nlohmann::json{{"phase", "setup"}, {"params", params.id}}.dump(), false);
  state = advance(state, PipelineEvent::PhaseComplete);  // -> Assessment

  bool redteam_done = false;
  while (true) {
    // Assessment: simulate scanners (streams and id sequences continue
    // across cycles) and, once, the red-team scenarios.
    std::vector<FindingSet> new_sets;
    for (const ScanProfile& profile : config.scan_profiles) {
      auto it = scan_streams.find(profile.methodology);
      if (it == scan_streams.end()) {
        it = scan_streams
                 .emplace(profile.methodology,
                          derive_stream(config.master_seed,
                                        "scan/" + lower(to_string(profile.methodology))))
                 .first;
      }
      std::uint32_t& seq = scan_seq[profile.methodology];
      FindingSet fs = simulate_scan(profile, it->second, seq);
      seq += static_cast<std::uint32_t>(fs.findings.size());
      new_sets.push_back(std::move(fs));
    }
    if (!redteam_done && !config.scenario_configs.empty()) {
      report.simulation = run_simulation(config.scenario_configs,
                                         derive_stream(config.master_seed, "redteam"));
      new_sets.push_back(attack_findings(report.simulation));
      redteam_done = true;
    }
    {
      std::vector<FindingSet> all;
      all.push_back(state.open_findings);
      for (FindingSet& fs : new_sets) all.push_back(fs);
      FindingSet merged = merge(all);
      merged.provenance = "pipeline";
      state.open_findings = std::move(merged);
    }
    for (const FindingSet& fs : new_sets) {
      for (const Finding& f : fs.findings) {
        std::string payload = to_json(f).dump();
        if (config.encrypt_ledger_payloads) {
          payload = encrypt_payload(keypair.pub, params, payload, crypto_stream);
        }
        log(f.detected_at, EventType::VulnerabilityDetection, std::move(payload),
            config.encrypt_ledger_payloads);
      }
    }
    state = advance(state, PipelineEvent::PhaseComplete);  // -> Remediation

    int validations = 0;
    while (true) {
      std::vector<std::size_t> newly =
          apply_remediation(state.open_findings, config.remediation_policy, remediation_stream);
      for (std::size_t idx : newly) {
        const Finding& f = state.open_findings.findings[idx];
        log(*f.resolved_at, EventType::RemediationAction, remediation_payload(f), false);
      }
      state = advance(state, PipelineEvent::PhaseComplete);  // -> Validation
      if (VerificationOutcome violation = verify_chain(*state.ledger)) {
        throw LedgerCorruptError("ledger verification failed at entry " +
                                 std::to_string(violation->index));
      }
      ++validations;
      report.unmet_targets = unmet_categories(state.open_findings, config.remediation_policy);
      if (report.unmet_targets.empty() || validations > 2) break;
      state = advance(state, PipelineEvent::ValidationFailed);  // retry remediation
    }
    log(clock, EventType::SystemChange,
        nlohmann::json{{"phase", "validation"}, {"cycle", state.cycle}}.dump(), false);
    state = advance(state, PipelineEvent::PhaseComplete);  // -> Iteration
    log(clock, EventType::SystemChange,
        nlohmann::json{{"phase", "iteration"}, {"cycle", state.cycle}}.dump(), false);
    state = advance(state, PipelineEvent::PhaseComplete);  // wrap, cycle + 1
    ++report.iteration_wraps;
    if (state.cycle >= config.max_cycles) {
      state = advance(state, PipelineEvent::Halt);
      break;
    }
  }

  report.severity_summaries = severity_summary({state.open_findings});
  std::vector<CostDerived> cost_table;
  for (const CostRecord& record : paper_cost_records()) {
    cost_table.push_back(derive_costs(record));
  }
  report.cost_table = std::move(cost_table);
  report.resolution_metrics =
      compute_metrics(state.open_findings, config.remediation_policy);
  report.findings = state.open_findings;
  report.ledger = state.ledger;
  report.verification = verify_chain(*state.ledger);
  report.final_state = std::move(state);
  return report;
}

PipelineRunReport replay_paper_scenario() {
  // Canned composition reproducing the reference tables: built-in scanner
  // profiles, crypto-survey and red-team finding bases at their published
  // counts, the default remediation policy, the 500-event audit ledger, the
  // scenario roster, and the built-in cost table.
  constexpr std::uint64_t kSeed = 42;
  const RemediationPolicy policy = RemediationPolicy::paper_default();

  Prng dast_stream = derive_stream(kSeed, "scan/dast");
  Prng sast_stream = derive_stream(kSeed, "scan/sast");
  Prng iast_stream = derive_stream(kSeed, "scan/iast");
  FindingSet dast = simulate_scan(paper_profile(Methodology::Dast), dast_stream, 0);
  FindingSet sast = simulate_scan(paper_profile(Methodology::Sast), sast_stream, 0);
  FindingSet iast = simulate_scan(paper_profile(Methodology::Iast), iast_stream, 0);

  auto seeded = [&](Methodology m, VulnCategory category, std::uint32_t count,
                    std::string_view stream_label, std::string_view target_stem) {
    FindingSet set;
    set.provenance = std::string("seeded:") + std::string(to_string(m));
    Prng stream = derive_stream(kSeed, std::string(stream_label));
    for (std::uint32_t i = 0; i < count; ++i) {
      Finding f;
      f.id = derive_finding_id(kSeed, m, i);
      f.methodology = m;
      f.category = category;
      f.severity = severity_for(category);
      f.target = std::string(target_stem) + "-" + std::to_string(i);
      f.detected_at = static_cast<Day>(stream.next_below(30));
      set.findings.push_back(std::move(f));
    }
    return set;
  };
  // Base counts chosen so the published resolution rates come out exactly:
  // 60 encryption flaws in total (44 scanned + 16 surveyed) and 8
  // adversarial-ML findings.
  FindingSet crypto_survey =
      seeded(Methodology::QuantumCrypto, VulnCategory::EncryptionFlaw, 16,
             "seed/encryption_flaw", "pq-survey/ENCRYPTION_FLAW");
  FindingSet redteam_base =
      seeded(Methodology::RedTeam, VulnCategory::AdversarialMl, 8,
             "seed/adversarial_ml", "redteam-exercise/ADVERSARIAL_ML");

  FindingSet merged = merge({dast, sast, iast, crypto_survey, redteam_base});
  merged.provenance = "replay";

  Prng remediation_stream = derive_stream(kSeed, "remediation");
  apply_remediation(merged, policy, remediation_stream);

  PipelineRunReport report;
  report.severity_summaries = severity_summary({merged});
  for (const CostRecord& record : paper_cost_records()) {
    report.cost_table.push_back(derive_costs(record));
  }
  report.simulation = run_simulation(paper_scenarios(), derive_stream(kSeed, "redteam"));
  report.ledger = std::make_shared<Ledger>(paper_scenario_ledger());
  report.verification = verify_chain(*report.ledger);
  report.findings = merged;
  report.resolution_metrics = compute_metrics(merged, policy);
  report.unmet_targets = unmet_categories(merged, policy);

  PipelineState state;
  state.ledger = report.ledger;
  state.open_findings = merged;
  state.clock = report.ledger->entries().back().timestamp;
  state = advance(state, PipelineEvent::PhaseComplete);  // Setup -> Assessment
  state = advance(state, PipelineEvent::PhaseComplete);  // -> Remediation
  state = advance(state, PipelineEvent::PhaseComplete);  // -> Validation
  state = advance(state, PipelineEvent::PhaseComplete);  // -> Iteration
  state = advance(state, PipelineEvent::PhaseComplete);  // wrap
  state = advance(state, PipelineEvent::Halt);
  report.iteration_wraps = 1;
  report.final_state = std::move(state);
  return report;
}

RunArtifacts make_artifacts(const PipelineRunReport& report) {
  RunArtifacts artifacts;
  artifacts.ledger_jsonl = export_audit(*report.ledger);
  artifacts.report_csv = emit_report(report.severity_summaries, report.cost_table,
                                     report.resolution_metrics, ReportFormat::Csv);
  artifacts.report_json = emit_report(report.severity_summaries, report.cost_table,
                                      report.resolution_metrics, ReportFormat::Json);
  return artifacts;
}

}  // namespace pqpt
