// pqpt: deterministic security-pipeline toolkit CLI.
// Exit codes: 0 success, 1 usage/input error, 2 validation targets unmet,
// 3 ledger corrupt.
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pqpt/attack.hpp"
#include "pqpt/errors.hpp"
#include "pqpt/ledger.hpp"
#include "pqpt/pipeline.hpp"
#include "pqpt/rlwe.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitTargetsUnmet = 2;
constexpr int kExitLedgerCorrupt = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pqpt::InvalidArgumentError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw pqpt::InvalidArgumentError("cannot write " + path);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

std::optional<std::uint64_t> env_seed() {
  const char* raw = std::getenv("PQPT_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  errno = 0;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (errno != 0 || end == raw || *end != '\0') {
    throw pqpt::InvalidArgumentError("PQPT_SEED is not an unsigned integer");
  }
  return static_cast<std::uint64_t>(v);
}

// --seed beats PQPT_SEED beats the fallback (config value or default).
std::uint64_t pick_seed(const std::optional<std::uint64_t>& flag, std::uint64_t fallback) {
  if (flag) return *flag;
  if (auto env = env_seed()) return *env;
  return fallback;
}

nlohmann::json poly_json(const pqpt::Poly& p) {
  return nlohmann::json(p.c);
}

pqpt::Poly poly_from_json(const nlohmann::json& j) {
  pqpt::Poly p;
  p.c = j.get<std::vector<std::uint32_t>>();
  return p;
}

void write_artifacts(const pqpt::PipelineRunReport& report, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  pqpt::RunArtifacts artifacts = pqpt::make_artifacts(report);
  write_file(out_dir + "/ledger.jsonl", artifacts.ledger_jsonl);
  write_file(out_dir + "/report.csv", artifacts.report_csv);
  write_file(out_dir + "/report.json", artifacts.report_json);
}

void print_run_summary(const pqpt::PipelineRunReport& report, const std::string& out_dir) {
  auto counts = pqpt::summarize_events(*report.ledger);
  std::cout << "findings: " << report.findings.findings.size() << "\n"
            << "ledger entries: " << report.ledger->size() << " (detections "
            << counts[pqpt::EventType::VulnerabilityDetection] << ", remediations "
            << counts[pqpt::EventType::RemediationAction] << ", system changes "
            << counts[pqpt::EventType::SystemChange] << ")\n"
            << "ledger verification: " << (report.verification ? "VIOLATION" : "valid") << "\n"
            << "iteration wraps: " << report.iteration_wraps << "\n";
  if (!report.unmet_targets.empty()) {
    std::cout << "unmet targets:";
    for (pqpt::VulnCategory c : report.unmet_targets) {
      std::cout << ' ' << pqpt::to_string(c);
    }
    std::cout << "\n";
  }
  std::cout << "artifacts: " << out_dir << "/ledger.jsonl, " << out_dir << "/report.csv, "
            << out_dir << "/report.json\n";
}

int finish_run(const pqpt::PipelineRunReport& report, const std::string& out_dir) {
  write_artifacts(report, out_dir);
  print_run_summary(report, out_dir);
  if (report.verification) return kExitLedgerCorrupt;
  if (!report.unmet_targets.empty()) return kExitTargetsUnmet;
  return kExitOk;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Deterministic pentest-pipeline toolkit: scanners, audit ledger, "
               "lattice crypto, red-team simulation, analytics, orchestration"};
  app.require_subcommand(1);

  // scan
  auto* scan = app.add_subcommand("scan", "Run the built-in scanner simulators or ingest a report");
  std::optional<std::uint64_t> scan_seed;
  std::string scan_ingest;
  std::string scan_out;
  std::vector<std::string> scan_methodologies{"DAST", "SAST", "IAST"};
  scan->add_option("--seed", scan_seed, "Master seed (beats PQPT_SEED)");
  scan->add_option("--ingest", scan_ingest, "Validate and normalize a findings JSON file");
  scan->add_option("--methodology", scan_methodologies,
                   "Scanner methodologies to simulate (default: DAST SAST IAST)");
  scan->add_option("--out", scan_out, "Output file (default: stdout)");

  // ledger verify / export
  auto* ledger = app.add_subcommand("ledger", "Audit-ledger operations");
  ledger->require_subcommand(1);
  auto* lverify = ledger->add_subcommand("verify", "Verify a JSON-lines ledger file");
  std::string lverify_path;
  lverify->add_option("file", lverify_path, "Ledger JSON-lines file")->required();
  auto* lexport = ledger->add_subcommand("export", "Export the built-in reference ledger");
  std::string lexport_out;
  lexport->add_option("--out", lexport_out, "Output file (default: stdout)");

  // crypto keygen/encrypt/decrypt
  auto* crypto = app.add_subcommand("crypto", "Lattice encryption operations");
  crypto->require_subcommand(1);
  std::string kg_params = "STD-256";
  std::optional<std::uint64_t> kg_seed;
  std::string kg_prefix = "pqpt-key";
  auto* keygen_cmd = crypto->add_subcommand("keygen", "Generate a key pair");
  keygen_cmd->add_option("--params", kg_params, "Parameter set id");
  keygen_cmd->add_option("--seed", kg_seed, "Master seed (beats PQPT_SEED)");
  keygen_cmd->add_option("--out-prefix", kg_prefix,
                         "Writes <prefix>.pub.json and <prefix>.sec.json");
  std::string enc_params;
  std::string enc_key;
  std::string enc_in;
  std::string enc_out;
  std::optional<std::uint64_t> enc_seed;
  auto* encrypt_cmd = crypto->add_subcommand("encrypt", "Encrypt a file payload");
  encrypt_cmd->add_option("--params", enc_params, "Parameter set id (default: from key file)");
  encrypt_cmd->add_option("--key", enc_key, "Public key file")->required();
  encrypt_cmd->add_option("--in", enc_in, "Payload file")->required();
  encrypt_cmd->add_option("--out", enc_out, "Ciphertext blob file")->required();
  encrypt_cmd->add_option("--seed", enc_seed, "Master seed (beats PQPT_SEED)");
  std::string dec_params;
  std::string dec_key;
  std::string dec_in;
  std::string dec_out;
  auto* decrypt_cmd = crypto->add_subcommand("decrypt", "Decrypt a ciphertext blob");
  decrypt_cmd->add_option("--params", dec_params, "Parameter set id (default: from key file)");
  decrypt_cmd->add_option("--key", dec_key, "Secret key file")->required();
  decrypt_cmd->add_option("--in", dec_in, "Ciphertext blob file")->required();
  decrypt_cmd->add_option("--out", dec_out, "Recovered payload file")->required();

  // attack
  auto* attack_cmd = app.add_subcommand("attack", "Exhaustive key-recovery demonstration");
  std::string atk_params = "TOY-4";
  std::string atk_budget = "1000000";
  std::optional<std::uint64_t> atk_seed;
  attack_cmd->add_option("--params", atk_params, "Parameter set id");
  attack_cmd->add_option("--budget", atk_budget, "Candidate budget (big integer)");
  attack_cmd->add_option("--seed", atk_seed, "Master seed (beats PQPT_SEED)");

  // simulate
  auto* simulate_cmd = app.add_subcommand("simulate", "Run red-team attack scenarios");
  std::string sim_scenarios;
  std::optional<std::uint64_t> sim_seed;
  simulate_cmd->add_option("--scenarios", sim_scenarios,
                           "Scenario JSON file (default: built-in roster)");
  simulate_cmd->add_option("--seed", sim_seed, "Master seed (beats PQPT_SEED)");

  // report
  auto* report_cmd = app.add_subcommand("report", "Emit the reference analytics report");
  std::string report_format = "csv";
  std::string report_out;
  report_cmd->add_option("--format", report_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  report_cmd->add_option("--out", report_out, "Output file (default: stdout)");

  // run
  auto* run_cmd = app.add_subcommand("run", "Run the full pipeline from a config file");
  std::string run_config;
  std::optional<std::uint64_t> run_seed;
  std::string run_out_dir = ".";
  run_cmd->add_option("--config", run_config, "Pipeline config JSON file")->required();
  run_cmd->add_option("--seed", run_seed, "Master seed (beats PQPT_SEED and the config)");
  run_cmd->add_option("--out-dir", run_out_dir, "Artifact directory");

  // replay-paper
  auto* replay_cmd =
      app.add_subcommand("replay-paper", "Replay the canned reference scenario end to end");
  std::string replay_out_dir = ".";
  replay_cmd->add_option("--out-dir", replay_out_dir, "Artifact directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion") {
      return app.exit(e);
    }
    app.exit(e);
    return kExitUsage;
  }

  if (scan->parsed()) {
    std::string document;
    if (!scan_ingest.empty()) {
      pqpt::FindingSet set = pqpt::ingest_report(read_file(scan_ingest));
      document = pqpt::serialize(set);
    } else {
      std::uint64_t seed = pick_seed(scan_seed, 42);
      std::vector<pqpt::FindingSet> sets;
      for (const std::string& name : scan_methodologies) {
        pqpt::Methodology m = pqpt::methodology_from_string(name);
        std::string label = "scan/";
        for (char c : name) {
          label += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
        pqpt::Prng stream = pqpt::derive_stream(seed, label);
        sets.push_back(pqpt::simulate_scan(pqpt::paper_profile(m), stream, 0));
      }
      document = pqpt::serialize(pqpt::merge(sets));
    }
    if (scan_out.empty()) {
      std::cout << document;
    } else {
      write_file(scan_out, document);
    }
    return kExitOk;
  }

  if (lverify->parsed()) {
    pqpt::Ledger imported;
    try {
      imported = pqpt::import_audit(read_file(lverify_path));
    } catch (const pqpt::Error& e) {
      std::cerr << "ledger corrupt: " << e.what() << "\n";
      return kExitLedgerCorrupt;
    }
    if (auto violation = pqpt::verify_chain(imported)) {
      const char* kind = violation->kind == pqpt::ViolationKind::HashMismatch ? "hash mismatch"
                         : violation->kind == pqpt::ViolationKind::LinkMismatch
                             ? "link mismatch"
                             : "index gap";
      std::cout << "VIOLATION at entry " << violation->index << ": " << kind << "\n";
      return kExitLedgerCorrupt;
    }
    std::cout << "valid: " << imported.size() << " entries\n";
    return kExitOk;
  }

  if (lexport->parsed()) {
    std::string document = pqpt::export_audit(pqpt::paper_scenario_ledger());
    if (lexport_out.empty()) {
      std::cout << document;
    } else {
      write_file(lexport_out, document);
    }
    return kExitOk;
  }

  if (keygen_cmd->parsed()) {
    const pqpt::RlweParams& params = pqpt::RlweParams::by_id(kg_params);
    pqpt::Prng stream = pqpt::derive_stream(pick_seed(kg_seed, 42), "crypto/keygen");
    pqpt::RlweKeyPair kp = pqpt::keygen(params, stream);
    nlohmann::json pub{{"params", params.id}, {"a", poly_json(kp.pub.a)}, {"b", poly_json(kp.pub.b)}};
    nlohmann::json sec{{"params", params.id}, {"s", poly_json(kp.s)}};
    write_file(kg_prefix + ".pub.json", pub.dump(2) + "\n");
    write_file(kg_prefix + ".sec.json", sec.dump(2) + "\n");
    std::cout << "wrote " << kg_prefix << ".pub.json and " << kg_prefix << ".sec.json\n";
    return kExitOk;
  }

  if (encrypt_cmd->parsed()) {
    nlohmann::json key = nlohmann::json::parse(read_file(enc_key));
    std::string key_params = key.at("params").get<std::string>();
    const pqpt::RlweParams& params =
        pqpt::RlweParams::by_id(enc_params.empty() ? key_params : enc_params);
    if (key_params != params.id) {
      throw pqpt::ParamMismatchError("key file params " + key_params +
                                     " does not match --params " + params.id);
    }
    pqpt::RlwePublicKey pub{poly_from_json(key.at("a")), poly_from_json(key.at("b"))};
    pqpt::Prng stream = pqpt::derive_stream(pick_seed(enc_seed, 42), "crypto/cli");
    write_file(enc_out, pqpt::encrypt_payload(pub, params, read_file(enc_in), stream));
    std::cout << "wrote " << enc_out << "\n";
    return kExitOk;
  }

  if (decrypt_cmd->parsed()) {
    nlohmann::json key = nlohmann::json::parse(read_file(dec_key));
    std::string key_params = key.at("params").get<std::string>();
    const pqpt::RlweParams& params =
        pqpt::RlweParams::by_id(dec_params.empty() ? key_params : dec_params);
    if (key_params != params.id) {
      throw pqpt::ParamMismatchError("key file params " + key_params +
                                     " does not match --params " + params.id);
    }
    write_file(dec_out,
               pqpt::decrypt_payload(poly_from_json(key.at("s")), params, read_file(dec_in)));
    std::cout << "wrote " << dec_out << "\n";
    return kExitOk;
  }

  if (attack_cmd->parsed()) {
    const pqpt::RlweParams& params = pqpt::RlweParams::by_id(atk_params);
    std::uint64_t seed = pick_seed(atk_seed, 42);
    pqpt::Prng kgs = pqpt::derive_stream(seed, "attack/keygen");
    pqpt::RlweKeyPair kp = pqpt::keygen(params, kgs);
    std::vector<std::uint8_t> message(params.n);
    for (std::uint32_t i = 0; i < params.n; ++i) message[i] = i & 1;
    pqpt::Prng es = pqpt::derive_stream(seed, "attack/encrypt");
    pqpt::RlweCiphertext ct = pqpt::encrypt(kp.pub, params, message, es);
    pqpt::AttackReport report =
        pqpt::simulate_quantum_attack(params, kp.pub, ct, message, pqpt::BigInt(atk_budget));
    const char* outcome = report.outcome == pqpt::AttackOutcome::Recovered ? "RECOVERED"
                          : report.outcome == pqpt::AttackOutcome::Exhausted ? "EXHAUSTED"
                                                                             : "BUDGET_EXCEEDED";
    std::cout << "params: " << params.id << "\n"
              << "keyspace: " << report.keyspace_size.str() << "\n"
              << "keys tried: " << report.keys_tried.str() << "\n"
              << "outcome: " << outcome << "\n"
              << "notes: " << report.wall_notes << "\n";
    if (report.secret) {
      std::cout << "secret matches: " << (*report.secret == kp.s ? "yes" : "no") << "\n";
    }
    return kExitOk;
  }

  if (simulate_cmd->parsed()) {
    std::vector<pqpt::ScenarioConfig> configs;
    if (sim_scenarios.empty()) {
      configs = pqpt::paper_scenarios();
    } else {
      nlohmann::json doc = nlohmann::json::parse(read_file(sim_scenarios));
      if (!doc.is_array()) throw pqpt::SchemaError("scenario document");
      for (const auto& s : doc) {
        pqpt::ScenarioConfig sc;
        sc.attack_type = pqpt::attack_type_from_string(s.at("attack_type").get<std::string>());
        sc.success_prob = s.at("success_prob").get<double>();
        sc.trials = s.at("trials").get<std::uint64_t>();
        if (s.contains("mean_detection_delay_days")) {
          sc.mean_detection_delay_days = s.at("mean_detection_delay_days").get<double>();
        }
        configs.push_back(sc);
      }
    }
    pqpt::Prng root = pqpt::derive_stream(pick_seed(sim_seed, 42), "redteam");
    pqpt::SimulationReport report = pqpt::run_simulation(configs, root);
    nlohmann::json out = nlohmann::json::array();
    for (const pqpt::ScenarioResult& r : report.results) {
      out.push_back({{"attack_type", std::string(pqpt::to_string(r.attack_type))},
                     {"trials", r.trials},
                     {"successes", r.successes},
                     {"observed_rate", r.observed_rate},
                     {"mean_detection_delay", r.mean_detection_delay},
                     {"theoretical", r.theoretical_flag}});
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  if (report_cmd->parsed()) {
    pqpt::PipelineRunReport replay = pqpt::replay_paper_scenario();
    std::string document = pqpt::emit_report(
        replay.severity_summaries, replay.cost_table, replay.resolution_metrics,
        report_format == "csv" ? pqpt::ReportFormat::Csv : pqpt::ReportFormat::Json);
    if (report_out.empty()) {
      std::cout << document;
    } else {
      write_file(report_out, document);
    }
    return kExitOk;
  }

  if (run_cmd->parsed()) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(read_file(run_config));
    } catch (const nlohmann::json::parse_error& e) {
      throw pqpt::ConfigInvalidError(std::string("config parse failure: ") + e.what());
    }
    pqpt::PipelineConfig config = pqpt::PipelineConfig::from_json(doc);
    config.master_seed = pick_seed(run_seed, config.master_seed);
    pqpt::PipelineRunReport result = pqpt::run_pipeline(config);
    return finish_run(result, run_out_dir);
  }

  if (replay_cmd->parsed()) {
    pqpt::PipelineRunReport result = pqpt::replay_paper_scenario();
    return finish_run(result, replay_out_dir);
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const pqpt::LedgerCorruptError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLedgerCorrupt;
  } catch (const pqpt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
