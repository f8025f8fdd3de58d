#include "pqpt/redteam.hpp"

#include <cmath>
#include <string>

#include "pqpt/errors.hpp"

namespace pqpt {

namespace {

std::string_view scenario_stream_suffix(AttackType t) {
  switch (t) {
    case AttackType::Phishing: return "phishing";
    case AttackType::AdversarialMl: return "adversarial_ml";
    case AttackType::QuantumDecryption: return "quantum_decryption";
  }
  throw InvalidArgumentError("unknown attack type");
}

}  // namespace

std::string_view to_string(AttackType t) {
  switch (t) {
    case AttackType::Phishing: return "PHISHING";
    case AttackType::AdversarialMl: return "ADVERSARIAL_ML";
    case AttackType::QuantumDecryption: return "QUANTUM_DECRYPTION";
  }
  throw InvalidArgumentError("unknown attack type");
}

AttackType attack_type_from_string(std::string_view s) {
  if (s == "PHISHING") return AttackType::Phishing;
  if (s == "ADVERSARIAL_ML") return AttackType::AdversarialMl;
  if (s == "QUANTUM_DECRYPTION") return AttackType::QuantumDecryption;
  throw SchemaError("attack_type");
}

std::vector<ScenarioConfig> paper_scenarios() {
  return {
      {AttackType::Phishing, 0.65, 10000, 1.0},
      {AttackType::AdversarialMl, 0.40, 10000, 1.0},
      {AttackType::QuantumDecryption, 0.0, 10000, 1.0},
  };
}

SimulationReport run_simulation(const std::vector<ScenarioConfig>& configs,
                                const Prng& prng) {
  SimulationReport report;
  report.master_seed = prng.master_seed();
  report.results.reserve(configs.size());
  for (const ScenarioConfig& config : configs) {
    if (config.success_prob < 0.0 || config.success_prob > 1.0) {
      throw InvalidArgumentError("success_prob outside [0, 1]");
    }
    if (config.trials == 0) {
      throw InvalidArgumentError("trials must be >= 1");
    }
    if (config.mean_detection_delay_days < 0.0) {
      throw InvalidArgumentError("mean_detection_delay_days must be non-negative");
    }
    Prng stream = prng.split(scenario_stream_suffix(config.attack_type));
    ScenarioResult result;
    result.attack_type = config.attack_type;
    result.trials = config.trials;
    result.theoretical_flag = config.attack_type == AttackType::QuantumDecryption;
    double delay_sum = 0.0;
    for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
      if (stream.next_double() < config.success_prob) {
        // Inverse-CDF exponential; 1 - u stays in (0, 1], so log is finite.
        double delay =
            -config.mean_detection_delay_days * std::log(1.0 - stream.next_double());
        if (result.successes == 0) result.first_success_delay = delay;
        ++result.successes;
        delay_sum += delay;
      }
    }
    result.observed_rate =
        static_cast<double>(result.successes) / static_cast<double>(result.trials);
    result.mean_detection_delay =
        result.successes > 0 ? delay_sum / static_cast<double>(result.successes) : 0.0;
    report.results.push_back(result);
  }
  return report;
}

FindingSet attack_findings(const SimulationReport& report) {
  FindingSet set;
  set.provenance = std::string("simulated:") + std::string(to_string(Methodology::RedTeam));
  std::uint32_t sequence = 0;
  for (const ScenarioResult& result : report.results) {
    if (result.successes == 0 || result.theoretical_flag) continue;
    Finding f;
    f.id = derive_finding_id(report.master_seed, Methodology::RedTeam, sequence);
    f.methodology = Methodology::RedTeam;
    switch (result.attack_type) {
      case AttackType::Phishing:
        f.category = VulnCategory::PhishingSusceptibility;
        break;
      case AttackType::AdversarialMl:
        f.category = VulnCategory::AdversarialMl;
        break;
      case AttackType::QuantumDecryption:
        f.category = VulnCategory::QuantumDecryptionRisk;
        break;
    }
    f.severity = severity_for(f.category);
    f.target = "redteam/" + std::string(scenario_stream_suffix(result.attack_type));
    f.detected_at = static_cast<Day>(std::floor(result.first_success_delay));
    set.findings.push_back(std::move(f));
    ++sequence;
  }
  return set;
}

}  // namespace pqpt
