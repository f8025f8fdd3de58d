#pragma once

#include <map>
#include <string_view>
#include <vector>

#include "pqpt/finding.hpp"
#include "pqpt/prng.hpp"
#include "pqpt/types.hpp"

namespace pqpt {

// Deterministic stand-in for one scanning tool run. Only scanner
// methodologies (Dast, Sast, Iast) are permitted and the category counts
// must sum to a positive total; construct through make_scan_profile.
struct ScanProfile {
  Methodology methodology = Methodology::Dast;
  std::map<VulnCategory, std::uint32_t> category_counts;
  std::uint32_t detection_window_days = 30;
};

ScanProfile make_scan_profile(Methodology m,
                              std::map<VulnCategory, std::uint32_t> counts,
                              std::uint32_t window_days);

// Built-in profiles replicating the reference study's scanner totals.
ScanProfile paper_profile(Methodology m);  // UnsupportedMethodologyError

// Emits exactly the profiled number of findings per category, in category
// enum order; detected_at uniform in [0, window); all findings open.
// sequence_base offsets the id sequence so multi-scan runs keep ids unique.
FindingSet simulate_scan(const ScanProfile& profile, Prng& prng,
                         std::uint32_t sequence_base = 0);

// Parses a JSON array of findings (the `.findings.json` interface).
// Unknown category strings degrade to Other; the count of such degradations
// is recorded in the returned provenance.
FindingSet ingest_report(std::string_view document);

// Order-preserving concatenation; throws DuplicateIdError on id collision.
FindingSet merge(const std::vector<FindingSet>& sets);

}  // namespace pqpt
