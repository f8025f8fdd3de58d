#include "pqpt/finding.hpp"

#include <algorithm>
#include <cctype>

#include "pqpt/errors.hpp"
#include "pqpt/hash.hpp"

namespace pqpt {

namespace {

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

bool is_hex_id(const std::string& id) {
  if (id.empty() || id.size() > 64) return false;
  return std::all_of(id.begin(), id.end(), [](unsigned char c) {
    return std::isxdigit(c) != 0;
  });
}

}  // namespace

std::string derive_finding_id(std::uint64_t master_seed, Methodology m,
                              std::uint32_t sequence) {
  std::string material = "pqpt.finding.id";
  material += be8(master_seed);
  material += static_cast<char>(static_cast<std::uint8_t>(m));
  material += be4(sequence);
  Hash256 h = sha256(material);
  return to_hex(h.data(), 16);
}

nlohmann::json to_json(const Finding& f) {
  nlohmann::json j;
  j["id"] = f.id;
  j["methodology"] = to_string(f.methodology);
  j["category"] = to_string(f.category);
  j["severity"] = to_string(f.severity);
  j["target"] = f.target;
  j["detected_at"] = f.detected_at;
  if (f.resolved_at.has_value()) {
    j["resolved_at"] = *f.resolved_at;
  } else {
    j["resolved_at"] = nullptr;
  }
  j["status"] = f.resolved() ? "RESOLVED" : "OPEN";
  return j;
}

Finding finding_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SchemaError("finding");
  auto require = [&](const char* field) -> const nlohmann::json& {
    auto it = j.find(field);
    if (it == j.end()) throw SchemaError(field);
    return *it;
  };

  Finding f;
  const auto& id = require("id");
  if (!id.is_string()) throw SchemaError("id");
  f.id = id.get<std::string>();
  std::transform(f.id.begin(), f.id.end(), f.id.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (!is_hex_id(f.id)) throw SchemaError("id");

  const auto& methodology = require("methodology");
  if (!methodology.is_string()) throw SchemaError("methodology");
  f.methodology = methodology_from_string(methodology.get<std::string>());

  const auto& category = require("category");
  if (!category.is_string()) throw SchemaError("category");
  // Unknown categories are the caller's concern (ingest degrades them);
  // here an unknown string is a schema violation.
  f.category = category_from_string(category.get<std::string>());

  const auto& severity = require("severity");
  if (!severity.is_string()) throw SchemaError("severity");
  f.severity = severity_from_string(severity.get<std::string>());

  const auto& target = require("target");
  if (!target.is_string()) throw SchemaError("target");
  f.target = target.get<std::string>();

  const auto& detected = require("detected_at");
  if (!detected.is_number_integer()) throw SchemaError("detected_at");
  f.detected_at = detected.get<Day>();
  if (f.detected_at < 0) throw SchemaError("detected_at");

  const auto& resolved = require("resolved_at");
  if (resolved.is_null()) {
    f.resolved_at.reset();
  } else if (resolved.is_number_integer()) {
    f.resolved_at = resolved.get<Day>();
    if (*f.resolved_at < f.detected_at) throw SchemaError("resolved_at");
  } else {
    throw SchemaError("resolved_at");
  }

  const auto& status = require("status");
  if (!status.is_string()) throw SchemaError("status");
  std::string s = status.get<std::string>();
  if (s != "OPEN" && s != "RESOLVED") throw SchemaError("status");
  if ((s == "RESOLVED") != f.resolved()) throw SchemaError("status");

  return f;
}

std::string serialize(const FindingSet& set) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& f : set.findings) arr.push_back(to_json(f));
  return arr.dump();
}

}  // namespace pqpt
