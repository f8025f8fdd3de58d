#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pqpt/hash.hpp"
#include "pqpt/types.hpp"

namespace pqpt {

enum class EventType : std::uint8_t {
  VulnerabilityDetection = 0,
  RemediationAction = 1,
  SystemChange = 2,
};

std::string_view to_string(EventType t);
EventType event_type_from_string(std::string_view s);  // SchemaError

// entry_hash = SHA-256(index 8B BE || timestamp 8B BE || event_type 1B ||
// payload_encrypted 1B || payload length 4B BE || payload || prev_hash).
struct LedgerEntry {
  std::uint64_t index = 0;
  Day timestamp = 0;
  EventType event_type = EventType::SystemChange;
  std::string payload;  // plaintext JSON or encrypted blob per flag
  bool payload_encrypted = false;
  Hash256 prev_hash{};  // 32 zero bytes for entry 0
  Hash256 entry_hash{};
};

Hash256 ledger_entry_hash(std::uint64_t index, Day timestamp, EventType type,
                          bool payload_encrypted, std::string_view payload,
                          const Hash256& prev_hash);

enum class ViolationKind : std::uint8_t { HashMismatch, LinkMismatch, IndexGap };

struct Violation {
  std::uint64_t index;  // smallest offending index
  ViolationKind kind;
};

// Empty optional means the chain verified clean.
using VerificationOutcome = std::optional<Violation>;

// Append-only single-writer hash chain. Appends must carry monotone
// non-decreasing timestamps; every other accessor is read-only.
class Ledger {
 public:
  Ledger() = default;

  const std::vector<LedgerEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // NonMonotoneTimestampError if timestamp precedes the last entry's.
  const LedgerEntry& append(Day timestamp, EventType event_type,
                            std::string payload, bool payload_encrypted);

  // Adopts entries verbatim (import path, tamper harnesses); callers verify.
  static Ledger from_entries(std::vector<LedgerEntry> entries);

 private:
  std::vector<LedgerEntry> entries_;
};

VerificationOutcome verify_chain(const Ledger& ledger);

std::map<EventType, std::uint64_t> summarize_events(const Ledger& ledger);

// JSON-lines, one entry per line, hashes lowercase hex; lossless round trip.
std::string export_audit(const Ledger& ledger);
Ledger import_audit(std::string_view document);  // ParseError / SchemaError

// The built-in 500-event reference scenario: 200 detections, 150 of them
// paired with same-day remediations, and 150 system-change markers at evenly
// spaced phase boundaries across a 180-day window.
Ledger paper_scenario_ledger();

}  // namespace pqpt
