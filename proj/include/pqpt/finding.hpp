#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pqpt/types.hpp"

namespace pqpt {

struct Finding {
  std::string id;  // 128-bit identifier as 32 lowercase hex chars
  Methodology methodology = Methodology::Dast;
  VulnCategory category = VulnCategory::Other;
  Severity severity = Severity::Low;
  std::string target;
  Day detected_at = 0;
  std::optional<Day> resolved_at;  // >= detected_at when present

  bool resolved() const { return resolved_at.has_value(); }
};

// Insertion-ordered collection; ids unique within a set.
struct FindingSet {
  std::vector<Finding> findings;
  std::string provenance;
};

// Deterministic id from (master seed, methodology, per-methodology sequence).
std::string derive_finding_id(std::uint64_t master_seed, Methodology m,
                              std::uint32_t sequence);

nlohmann::json to_json(const Finding& f);
Finding finding_from_json(const nlohmann::json& j);  // SchemaError

// JSON array document, one object per finding, insertion order.
std::string serialize(const FindingSet& set);

}  // namespace pqpt
