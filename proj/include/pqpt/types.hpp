#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace pqpt {

// Day index counted from run start; all simulation time is integer days.
using Day = std::int64_t;

enum class Severity : std::uint8_t { Critical = 0, High, Medium, Low };

enum class Methodology : std::uint8_t {
  Dast = 0,
  Sast,
  Iast,
  BlockchainLogging,
  QuantumCrypto,
  RedTeam,
};

enum class VulnCategory : std::uint8_t {
  SqlInjection = 0,
  Xss,
  Csrf,
  ConfigOrAuthOther,
  InsecureCoding,
  LogicError,
  Backdoor,
  InsecureDataHandling,
  AccessControlWeakness,
  EncryptionFlaw,
  AdversarialMl,
  PhishingSusceptibility,
  QuantumDecryptionRisk,
  Other,
};

inline constexpr int kVulnCategoryCount = 14;
inline constexpr int kMethodologyCount = 6;

// Total, fixed category -> severity triage mapping.
Severity severity_for(VulnCategory category);

// Wire names (upper snake case) used in every JSON interface.
std::string_view to_string(Severity s);
std::string_view to_string(Methodology m);
std::string_view to_string(VulnCategory c);

Severity severity_from_string(std::string_view s);          // SchemaError
Methodology methodology_from_string(std::string_view s);    // SchemaError
VulnCategory category_from_string(std::string_view s);      // SchemaError
bool try_category_from_string(std::string_view s, VulnCategory& out);

// Reporting label: Dast and Sast aggregate under "DAST & SAST".
std::string_view report_label(Methodology m);

}  // namespace pqpt
