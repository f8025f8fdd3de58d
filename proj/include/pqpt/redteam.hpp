#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "pqpt/finding.hpp"
#include "pqpt/prng.hpp"

namespace pqpt {

enum class AttackType : std::uint8_t { Phishing = 0, AdversarialMl, QuantumDecryption };

std::string_view to_string(AttackType t);
AttackType attack_type_from_string(std::string_view s);  // SchemaError

struct ScenarioConfig {
  AttackType attack_type = AttackType::Phishing;
  double success_prob = 0.0;  // in [0, 1]
  std::uint64_t trials = 1;   // >= 1
  double mean_detection_delay_days = 1.0;
};

struct ScenarioResult {
  AttackType attack_type;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double observed_rate = 0.0;         // successes / trials exactly
  double mean_detection_delay = 0.0;  // days, over successes; 0 when none
  double first_success_delay = 0.0;   // days; 0 when no success
  bool theoretical_flag = false;      // set for QuantumDecryption
};

struct SimulationReport {
  std::vector<ScenarioResult> results;
  std::uint64_t master_seed = 0;  // id derivation for attack_findings
};

// Built-in scenario roster: phishing 0.65, adversarial ML 0.40, and the
// theoretical quantum decryption scenario at 0.0, each at 10^4 trials.
std::vector<ScenarioConfig> paper_scenarios();

// Bernoulli(success_prob) per trial; each success draws an exponential
// detection delay with the configured mean. Each scenario consumes its own
// child stream of prng, so scenario order never shifts another's draws.
SimulationReport run_simulation(const std::vector<ScenarioConfig>& configs,
                                const Prng& prng);

// One finding per attack class with at least one success; the theoretical
// class is excluded. Detection day = floor of the first success's delay.
FindingSet attack_findings(const SimulationReport& report);

}  // namespace pqpt
