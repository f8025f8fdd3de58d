#include "pqpt/analytics.hpp"

#include <cstdio>
#include <map>

#include <json.hpp>

#include "pqpt/errors.hpp"

namespace pqpt {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

double dollars(Cents cents) { return static_cast<double>(cents) / 100.0; }

}  // namespace

CostDerived derive_costs(const CostRecord& record) {
  if (record.avg_days_to_resolve <= 0.0) {
    throw InvalidArgumentError("avg_days_to_resolve must be positive");
  }
  if (record.months == 0) {
    throw InvalidArgumentError("months must be positive");
  }
  CostDerived out;
  out.methodology_label = record.methodology_label;
  out.total_cost = record.setup_cost +
                   static_cast<Cents>(record.months) * record.monthly_op_cost +
                   record.remediation_cost;
  if (record.detected > 0) {
    out.cost_per_detected = dollars(out.total_cost) / static_cast<double>(record.detected);
  }
  if (record.resolved > 0) {
    out.cost_per_resolved = dollars(out.total_cost) / static_cast<double>(record.resolved);
  }
  out.efficiency = static_cast<double>(record.resolved) / record.avg_days_to_resolve;
  out.resolved_exceeds_detected = record.resolved > record.detected;
  return out;
}

std::vector<CostRecord> paper_cost_records() {
  auto usd = [](std::int64_t whole) { return whole * 100; };
  return {
      {"DAST & SAST", usd(50000), usd(10000), 6, usd(20000), 165, 130, 15.0},
      {"IAST", usd(40000), usd(8000), 6, usd(15000), 87, 70, 10.0},
      {"Blockchain Logging", usd(100000), usd(15000), 6, usd(25000), 500, 450, 5.0},
      {"Quantum Cryptography", usd(75000), usd(12000), 6, usd(30000), 260, 220, 20.0},
      {"Red Team AI Simulations", usd(60000), usd(10000), 6, usd(18000), 3, 3, 25.0},
  };
}

std::vector<SeveritySummary> severity_summary(const std::vector<FindingSet>& sets) {
  std::map<std::string_view, SeveritySummary> groups;
  std::vector<std::string_view> order;
  for (const FindingSet& set : sets) {
    for (const Finding& f : set.findings) {
      std::string_view label = report_label(f.methodology);
      auto it = groups.find(label);
      if (it == groups.end()) {
        it = groups.emplace(label, SeveritySummary{std::string(label), 0, 0, 0, 0, 0}).first;
      }
      SeveritySummary& s = it->second;
      ++s.total;
      switch (f.severity) {
        case Severity::Critical: ++s.critical; break;
        case Severity::High: ++s.high; break;
        case Severity::Medium: ++s.medium; break;
        case Severity::Low: ++s.low; break;
      }
    }
  }
  // Fixed reporting order: the methodology enum walk, labels deduplicated.
  std::vector<SeveritySummary> out;
  for (int m = 0; m < kMethodologyCount; ++m) {
    std::string_view label = report_label(static_cast<Methodology>(m));
    auto it = groups.find(label);
    if (it == groups.end()) continue;
    out.push_back(it->second);
    groups.erase(it);
  }
  return out;
}

double resolution_rate(const FindingSet& set, VulnCategory category) {
  std::uint64_t total = 0;
  std::uint64_t resolved = 0;
  for (const Finding& f : set.findings) {
    if (f.category != category) continue;
    ++total;
    if (f.resolved()) ++resolved;
  }
  if (total == 0) {
    throw NoSuchCategoryInSetError("no " + std::string(to_string(category)) +
                                   " findings in the set");
  }
  return static_cast<double>(resolved) / static_cast<double>(total);
}

double remediation_sla(const FindingSet& set, std::uint32_t window_days) {
  if (set.findings.empty()) throw EmptySetError("remediation SLA over an empty finding set");
  if (window_days == 0) throw InvalidArgumentError("SLA window must be positive");
  std::uint64_t within = 0;
  for (const Finding& f : set.findings) {
    if (f.resolved() && *f.resolved_at - f.detected_at <= static_cast<Day>(window_days)) {
      ++within;
    }
  }
  return static_cast<double>(within) / static_cast<double>(set.findings.size());
}

std::string emit_report(const std::vector<SeveritySummary>& summaries,
                        const std::vector<CostDerived>& derived,
                        const ResolutionMetrics& metrics, ReportFormat format) {
  if (format == ReportFormat::Csv) {
    std::string out = "methodology,total_cost,cost_per_detected,cost_per_resolved,efficiency\n";
    for (const CostDerived& d : derived) {
      out += d.methodology_label;
      out += ',';
      out += fixed6(dollars(d.total_cost));
      out += ',';
      out += d.cost_per_detected ? fixed6(*d.cost_per_detected) : "undefined";
      out += ',';
      out += d.cost_per_resolved ? fixed6(*d.cost_per_resolved) : "undefined";
      out += ',';
      out += fixed6(d.efficiency);
      out += '\n';
    }
    return out;
  }

  nlohmann::json doc;
  doc["severity_summaries"] = nlohmann::json::array();
  for (const SeveritySummary& s : summaries) {
    doc["severity_summaries"].push_back({{"label", s.label},
                                         {"total", s.total},
                                         {"critical", s.critical},
                                         {"high", s.high},
                                         {"medium", s.medium},
                                         {"low", s.low}});
  }
  doc["cost_effectiveness"] = nlohmann::json::array();
  for (const CostDerived& d : derived) {
    nlohmann::json row{{"methodology", d.methodology_label},
                       {"total_cost", dollars(d.total_cost)},
                       {"efficiency", d.efficiency}};
    row["cost_per_detected"] =
        d.cost_per_detected ? nlohmann::json(*d.cost_per_detected) : nlohmann::json(nullptr);
    row["cost_per_resolved"] =
        d.cost_per_resolved ? nlohmann::json(*d.cost_per_resolved) : nlohmann::json(nullptr);
    doc["cost_effectiveness"].push_back(std::move(row));
  }
  doc["resolution_rates"] = nlohmann::json::object();
  for (const auto& [category, rate] : metrics.rates) {
    doc["resolution_rates"][std::string(to_string(category))] = rate;
  }
  doc["sla"] = {{"window_days", metrics.sla_window_days},
                {"value", metrics.sla ? nlohmann::json(*metrics.sla) : nlohmann::json(nullptr)}};
  return doc.dump(2) + "\n";
}

}  // namespace pqpt
