#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cfl {

enum class CheckStatus { pass, fail, external_reference, unknown_group };
const char* check_status_name(CheckStatus s) noexcept;
CheckStatus parse_check_status(const std::string& s);

struct CheckRecord {
  std::string claim;
  std::string anchor;  // stable descriptive id, e.g. "cubic.trace-table.row(1,1,1,-1)"
  std::string computed;
  std::string expected;
  CheckStatus status = CheckStatus::fail;
  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct VerificationReport {
  std::string command;
  std::map<std::string, std::string> inputs;
  std::vector<CheckRecord> records;
  std::vector<std::string> notes;  // metadata, not checked
  double seconds = 0;  // kept out of the deterministic payload

  /// Every record passes or is an external reference.
  bool passed() const;
  int count(CheckStatus s) const;
  /// Adds a record comparing two strings.
  void check(std::string claim, std::string anchor, std::string computed, std::string expected);
  void check(std::string claim, std::string anchor, bool ok, std::string computed, std::string expected);
  void external(std::string claim, std::string anchor, std::string expected);
  friend bool operator==(const VerificationReport& a, const VerificationReport& b) {
    return a.command == b.command && a.inputs == b.inputs && a.records == b.records && a.notes == b.notes;
  }
};

/// Field names: command, inputs, records[{claim, anchor, computed, expected,
/// status}], notes, passed, counts; timing only when `with_timing`.
std::string report_to_json(const VerificationReport& r, bool with_timing = false);
/// parse_error on malformed documents.
VerificationReport report_from_json(const std::string& text);
std::string report_to_text(const VerificationReport& r);

struct VerifyOptions {
  std::optional<std::filesystem::path> cache_dir;
  unsigned jobs = 1;
  int max_order = 1000;
};

const std::vector<std::string>& verify_targets();
/// Runs one pipeline. Throws invalid_argument for unknown targets; errors
/// from the pipeline propagate.
VerificationReport verify(const std::string& target, const VerifyOptions& opt = {});

}  // namespace cfl
