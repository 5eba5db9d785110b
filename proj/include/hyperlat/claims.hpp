#pragma once

// Catalog of checkable claims, the runner, golden values and reports.

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace hyperlat {

using json = nlohmann::ordered_json;

enum class ClaimStatus { pass, fail, skipped, exploratory };
std::string to_string(ClaimStatus s);
ClaimStatus parse_status(const std::string& s);

/// Frozen implementation-derived values: `key = <json>` lines, # comments.
class Golden {
 public:
  static Golden load(const std::string& path);
  static Golden parse(const std::string& text);
  bool has(const std::string& key) const { return values_.count(key) != 0; }
  json get(const std::string& key) const;  // throws when missing
  void set(const std::string& key, std::string value) { values_[key] = std::move(value); }
  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

/// Writes all values with the comment attached to each known key.
std::string format_golden(const Golden& g);

/// Path of the golden file in the source tree.
std::string default_golden_path();

struct RunOptions {
  unsigned threads = 1;
  std::uint64_t budget_elements = 2'000'000;
  double tol = 1e-8;
  Golden golden;
  /// Collects values for golden keys instead of comparing against them.
  bool regenerate = false;
};

struct ClaimRecord {
  std::string id, description, reference;
  json expected, computed;
  ClaimStatus status = ClaimStatus::skipped;
  std::string note;
  double seconds = 0;
};

struct Report {
  std::vector<ClaimRecord> claims;
  /// golden keys produced by the run (filled in regenerate mode)
  std::map<std::string, std::string> golden_updates;
  bool failed() const;
};

struct ClaimInfo {
  std::string id, description, reference;
  bool exploratory = false;
};

std::vector<ClaimInfo> claim_catalog();

/// Shell-style glob with * and ?; comma separates alternatives.
bool glob_match(const std::string& pattern, const std::string& id);

Report run_claims(const std::string& filter, const RunOptions& opt);

json report_to_json(const Report& r);
std::string report_to_text(const Report& r);
/// Either format; text reports keep ids, statuses, times and descriptions.
Report parse_report(const std::string& document);

}  // namespace hyperlat
