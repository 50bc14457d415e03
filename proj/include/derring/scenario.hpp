#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "derring/lie_ring.hpp"
#include "derring/names.hpp"
#include "derring/solder.hpp"

namespace derring {

struct ScenarioConfig {
  std::string check;                  // T2, C14, GGC4, ... , T5SCAN, ORACLE
  std::vector<nlohmann::json> rings;  // specs; empty = per-check default
  std::vector<nlohmann::json> groups;
  // explicit group-ring fragments {"ring": ..., "group": ...}; when present
  // they replace the rings x groups product for pair-driven checks
  std::vector<std::pair<nlohmann::json, nlohmann::json>> pairs;
  Caps caps;
  std::uint64_t seed = 1;
  std::size_t samples = 500;

  static ScenarioConfig from_json(const nlohmann::json &j);
  nlohmann::json to_json() const;
};

struct Instance {
  std::string check;
  std::string ring;
  std::string group;  // may be empty
  std::string sub;    // sub-check id, may be empty
  std::string hypothesis;
  bool hypothesis_satisfied = true;
  std::string verdict;  // PASS / FAIL / SKIP / FLAG / ERROR
  nlohmann::json detail;
  double millis = 0.0;

  std::string key() const { return check + "|" + ring + "|" + group + "|" + sub; }
};

struct Report {
  std::string check;  // single check id or "scan"
  std::uint64_t seed = 0;
  std::vector<Instance> instances;

  std::size_t count(const std::string &verdict) const;
  bool has_fail() const { return count("FAIL") + count("ERROR") > 0; }
  int exit_code() const { return has_fail() ? 1 : 0; }
  /// Deterministic body; the volatile "timestamp" object (wall-clock stamp
  /// plus per-instance timings) is attached only when with_timing is set.
  nlohmann::json to_json(bool with_timing = true) const;
  std::string text_summary() const;

  void sort_instances();
  void append(const Report &other);
};

/// All known check ids, in canonical order.
const std::vector<std::string> &all_checks();

Report run_scenario(const ScenarioConfig &cfg);

/// Every check over the default families, one merged report.
Report run_scan(std::uint64_t seed, const Caps &caps);

/// Dense brute-force enumerations used to certify the kernel solver.  The
/// candidate image space (|B|^generators resp. |carrier|^|G|) must stay
/// within 2^log2_cap.
std::vector<IntVec> oracle_der(const FiniteRing &b, double log2_cap);
std::vector<IntVec> oracle_der_r(const GroupRing &gr, double log2_cap);

}  // namespace derring
