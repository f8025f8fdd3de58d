#include "pqpt/scanners.hpp"

#include <unordered_set>

#include <json.hpp>

#include "pqpt/errors.hpp"

namespace pqpt {

ScanProfile make_scan_profile(Methodology m,
                              std::map<VulnCategory, std::uint32_t> counts,
                              std::uint32_t window_days) {
  if (m != Methodology::Dast && m != Methodology::Sast && m != Methodology::Iast) {
    throw UnsupportedMethodologyError("scan profiles accept DAST, SAST, or IAST only");
  }
  if (window_days == 0) {
    throw InvalidArgumentError("detection window must be positive");
  }
  std::uint64_t total = 0;
  for (const auto& [category, count] : counts) {
    (void)category;
    total += count;
  }
  if (total == 0) {
    throw InvalidArgumentError("profile category counts must sum to a positive total");
  }
  return ScanProfile{m, std::move(counts), window_days};
}

ScanProfile paper_profile(Methodology m) {
  switch (m) {
    case Methodology::Dast:
      return make_scan_profile(m,
                               {{VulnCategory::SqlInjection, 10},
                                {VulnCategory::Xss, 15},
                                {VulnCategory::Csrf, 8},
                                {VulnCategory::ConfigOrAuthOther, 20}},
                               30);
    case Methodology::Sast:
      return make_scan_profile(m,
                               {{VulnCategory::InsecureCoding, 30},
                                {VulnCategory::LogicError, 20},
                                {VulnCategory::Backdoor, 62}},
                               30);
    case Methodology::Iast:
      return make_scan_profile(m,
                               {{VulnCategory::InsecureDataHandling, 25},
                                {VulnCategory::AccessControlWeakness, 18},
                                {VulnCategory::EncryptionFlaw, 44}},
                               180);
    default:
      throw UnsupportedMethodologyError("no built-in profile for this methodology");
  }
}

FindingSet simulate_scan(const ScanProfile& profile, Prng& prng,
                         std::uint32_t sequence_base) {
  FindingSet set;
  set.provenance = std::string("simulated:") + std::string(to_string(profile.methodology));
  std::uint32_t seq = sequence_base;
  for (const auto& [category, count] : profile.category_counts) {
    for (std::uint32_t i = 0; i < count; ++i) {
      Finding f;
      f.id = derive_finding_id(prng.master_seed(), profile.methodology, seq);
      f.methodology = profile.methodology;
      f.category = category;
      f.severity = severity_for(category);
      f.target = "app-" + std::to_string(seq % 5) + "/" +
                 std::string(to_string(category)) + "-" + std::to_string(i);
      f.detected_at = static_cast<Day>(prng.next_below(profile.detection_window_days));
      set.findings.push_back(std::move(f));
      ++seq;
    }
  }
  return set;
}

FindingSet ingest_report(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  if (!doc.is_array()) throw SchemaError("document");

  FindingSet set;
  std::unordered_set<std::string> seen;
  std::uint64_t degraded = 0;
  for (auto& element : doc) {
    // Unknown category strings degrade to Other before schema validation.
    if (element.is_object()) {
      auto it = element.find("category");
      if (it != element.end() && it->is_string()) {
        VulnCategory c;
        if (!try_category_from_string(it->get<std::string>(), c)) {
          element["category"] = to_string(VulnCategory::Other);
          ++degraded;
        }
      }
    }
    Finding f = finding_from_json(element);
    if (!seen.insert(f.id).second) throw DuplicateIdError(f.id);
    set.findings.push_back(std::move(f));
  }
  set.provenance = "ingest: " + std::to_string(set.findings.size()) + " findings";
  if (degraded > 0) {
    set.provenance += ", " + std::to_string(degraded) + " unknown categories mapped to OTHER";
  }
  return set;
}

FindingSet merge(const std::vector<FindingSet>& sets) {
  FindingSet out;
  out.provenance = "merged";
  std::unordered_set<std::string> seen;
  for (const auto& set : sets) {
    for (const auto& f : set.findings) {
      if (!seen.insert(f.id).second) throw DuplicateIdError(f.id);
      out.findings.push_back(f);
    }
  }
  return out;
}

}  // namespace pqpt
