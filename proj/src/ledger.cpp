#include "pqpt/ledger.hpp"

#include <algorithm>

#include <json.hpp>

#include "pqpt/errors.hpp"

namespace pqpt {

namespace {

constexpr std::array<std::string_view, 3> kEventNames{
    "VULNERABILITY_DETECTION", "REMEDIATION_ACTION", "SYSTEM_CHANGE"};

std::string be8(std::uint64_t v) {
  std::string out(8, '\0');
  for (int i = 0; i < 8; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<char>((v >> (56 - 8 * i)) & 0xFF);
  }
  return out;
}

std::string be4(std::uint32_t v) {
  std::string out(4, '\0');
  for (int i = 0; i < 4; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<char>((v >> (24 - 8 * i)) & 0xFF);
  }
  return out;
}

}  // namespace

std::string_view to_string(EventType t) {
  return kEventNames[static_cast<std::size_t>(t)];
}

EventType event_type_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kEventNames.size(); ++i) {
    if (kEventNames[i] == s) return static_cast<EventType>(i);
  }
  throw SchemaError("event_type");
}

Hash256 ledger_entry_hash(std::uint64_t index, Day timestamp, EventType type,
                          bool payload_encrypted, std::string_view payload,
                          const Hash256& prev_hash) {
  std::string material;
  material.reserve(8 + 8 + 1 + 1 + 4 + payload.size() + 32);
  material += be8(index);
  material += be8(static_cast<std::uint64_t>(timestamp));
  material += static_cast<char>(static_cast<std::uint8_t>(type));
  material += static_cast<char>(payload_encrypted ? 1 : 0);
  material += be4(static_cast<std::uint32_t>(payload.size()));
  material += payload;
  material.append(reinterpret_cast<const char*>(prev_hash.data()), prev_hash.size());
  return sha256(material);
}

const LedgerEntry& Ledger::append(Day timestamp, EventType event_type,
                                  std::string payload, bool payload_encrypted) {
  if (timestamp < 0) throw InvalidArgumentError("ledger timestamps must be non-negative");
  if (!entries_.empty() && timestamp < entries_.back().timestamp) {
    throw NonMonotoneTimestampError("timestamp precedes the previous entry");
  }
  LedgerEntry entry;
  entry.index = entries_.size();
  entry.timestamp = timestamp;
  entry.event_type = event_type;
  entry.payload = std::move(payload);
  entry.payload_encrypted = payload_encrypted;
  entry.prev_hash = entries_.empty() ? Hash256{} : entries_.back().entry_hash;
  entry.entry_hash = ledger_entry_hash(entry.index, entry.timestamp, entry.event_type,
                                       entry.payload_encrypted, entry.payload,
                                       entry.prev_hash);
  entries_.push_back(std::move(entry));
  return entries_.back();
}

Ledger Ledger::from_entries(std::vector<LedgerEntry> entries) {
  Ledger ledger;
  ledger.entries_ = std::move(entries);
  return ledger;
}

VerificationOutcome verify_chain(const Ledger& ledger) {
  const auto& entries = ledger.entries();
  Hash256 expected_prev{};  // genesis: 32 zero bytes
  for (std::size_t pos = 0; pos < entries.size(); ++pos) {
    const LedgerEntry& e = entries[pos];
    // Checks ordered so the reported kind names the narrowest breach.
    if (e.index != pos) {
      return Violation{static_cast<std::uint64_t>(pos), ViolationKind::IndexGap};
    }
    if (e.prev_hash != expected_prev) {
      return Violation{e.index, ViolationKind::LinkMismatch};
    }
    Hash256 recomputed = ledger_entry_hash(e.index, e.timestamp, e.event_type,
                                           e.payload_encrypted, e.payload, e.prev_hash);
    if (recomputed != e.entry_hash) {
      return Violation{e.index, ViolationKind::HashMismatch};
    }
    expected_prev = e.entry_hash;
  }
  return std::nullopt;
}

std::map<EventType, std::uint64_t> summarize_events(const Ledger& ledger) {
  std::map<EventType, std::uint64_t> counts{
      {EventType::VulnerabilityDetection, 0},
      {EventType::RemediationAction, 0},
      {EventType::SystemChange, 0},
  };
  for (const auto& e : ledger.entries()) ++counts[e.event_type];
  return counts;
}

std::string export_audit(const Ledger& ledger) {
  std::string out;
  for (const auto& e : ledger.entries()) {
    nlohmann::json line;
    line["index"] = e.index;
    line["timestamp"] = e.timestamp;
    line["event_type"] = to_string(e.event_type);
    line["payload_encrypted"] = e.payload_encrypted;
    line["payload_hex"] = to_hex(reinterpret_cast<const std::uint8_t*>(e.payload.data()),
                                 e.payload.size());
    line["prev_hash_hex"] = to_hex(e.prev_hash);
    line["entry_hash_hex"] = to_hex(e.entry_hash);
    out += line.dump();
    out += '\n';
  }
  return out;
}

Ledger import_audit(std::string_view document) {
  std::vector<LedgerEntry> entries;
  std::size_t line_start = 0;
  std::size_t line_no = 0;
  while (line_start < document.size()) {
    std::size_t line_end = document.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = document.size();
    std::string_view line = document.substr(line_start, line_end - line_start);
    if (!line.empty()) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), line_start + e.byte);
      }
      if (!j.is_object()) throw SchemaError("entry");
      auto require = [&](const char* field) -> const nlohmann::json& {
        auto it = j.find(field);
        if (it == j.end()) throw SchemaError(field);
        return *it;
      };
      LedgerEntry e;
      const auto& index = require("index");
      if (!index.is_number_unsigned()) throw SchemaError("index");
      e.index = index.get<std::uint64_t>();
      const auto& ts = require("timestamp");
      if (!ts.is_number_integer()) throw SchemaError("timestamp");
      e.timestamp = ts.get<Day>();
      const auto& type = require("event_type");
      if (!type.is_string()) throw SchemaError("event_type");
      e.event_type = event_type_from_string(type.get<std::string>());
      const auto& enc = require("payload_encrypted");
      if (!enc.is_boolean()) throw SchemaError("payload_encrypted");
      e.payload_encrypted = enc.get<bool>();
      const auto& payload = require("payload_hex");
      if (!payload.is_string()) throw SchemaError("payload_hex");
      try {
        e.payload = from_hex(payload.get<std::string>());
      } catch (const InvalidArgumentError&) {
        throw SchemaError("payload_hex");
      }
      const auto& prev = require("prev_hash_hex");
      const auto& hash = require("entry_hash_hex");
      if (!prev.is_string()) throw SchemaError("prev_hash_hex");
      if (!hash.is_string()) throw SchemaError("entry_hash_hex");
      try {
        e.prev_hash = hash_from_hex(prev.get<std::string>());
        e.entry_hash = hash_from_hex(hash.get<std::string>());
      } catch (const InvalidArgumentError&) {
        throw SchemaError("hash_hex");
      }
      entries.push_back(std::move(e));
      ++line_no;
      (void)line_no;
    }
    line_start = line_end + 1;
  }
  return Ledger::from_entries(std::move(entries));
}

Ledger paper_scenario_ledger() {
  // 500 events over a 180-day engagement: 150 detection -> same-day
  // remediation pairs (days 0..149), 50 later unpaired detections, and 150
  // system-change markers at evenly spaced phase boundaries. Within a day,
  // boundary markers precede detections, detections precede remediations.
  struct Event {
    Day day;
    int rank;  // 0 system change, 1 detection, 2 remediation
    int seq;
    EventType type;
    std::string payload;
  };
  std::vector<Event> events;
  events.reserve(500);
  for (int k = 0; k < 150; ++k) {
    Day day = static_cast<Day>(k);
    events.push_back({day, 1, k, EventType::VulnerabilityDetection,
                      R"({"event":"detection","pair":)" + std::to_string(k) + "}"});
    events.push_back({day, 2, k, EventType::RemediationAction,
                      R"({"event":"remediation","pair":)" + std::to_string(k) + "}"});
  }
  for (int j = 0; j < 50; ++j) {
    Day day = static_cast<Day>(150 + (3 * j) / 5);
    events.push_back({day, 1, 150 + j, EventType::VulnerabilityDetection,
                      R"({"event":"detection","extra":)" + std::to_string(j) + "}"});
  }
  for (int m = 0; m < 150; ++m) {
    Day day = static_cast<Day>((6 * m) / 5);
    events.push_back({day, 0, m, EventType::SystemChange,
                      R"({"event":"system_change","boundary":)" + std::to_string(m) + "}"});
  }
  std::stable_sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.day != b.day) return a.day < b.day;
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.seq < b.seq;
  });

  Ledger ledger;
  for (auto& event : events) {
    ledger.append(event.day, event.type, std::move(event.payload), false);
  }
  return ledger;
}

}  // namespace pqpt
