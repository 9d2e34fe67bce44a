#include "cfl/report/report.hpp"

#include <json.hpp>
#include <sstream>

#include "cfl/error.hpp"

namespace cfl {

using nlohmann::ordered_json;

const char* check_status_name(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::external_reference: return "external-reference";
    case CheckStatus::unknown_group: return "unknown-group";
  }
  return "?";
}

CheckStatus parse_check_status(const std::string& s) {
  for (auto c : {CheckStatus::pass, CheckStatus::fail, CheckStatus::external_reference, CheckStatus::unknown_group})
    if (s == check_status_name(c)) return c;
  throw Error(ErrorCode::parse_error, "unknown status " + s);
}

bool VerificationReport::passed() const {
  for (const auto& r : records)
    if (r.status != CheckStatus::pass && r.status != CheckStatus::external_reference) return false;
  return true;
}

int VerificationReport::count(CheckStatus s) const {
  int n = 0;
  for (const auto& r : records) n += r.status == s;
  return n;
}

void VerificationReport::check(std::string claim, std::string anchor, std::string computed, std::string expected) {
  bool ok = computed == expected;
  check(std::move(claim), std::move(anchor), ok, std::move(computed), std::move(expected));
}

void VerificationReport::check(std::string claim, std::string anchor, bool ok, std::string computed,
                               std::string expected) {
  records.push_back({std::move(claim), std::move(anchor), std::move(computed), std::move(expected),
                     ok ? CheckStatus::pass : CheckStatus::fail});
}

void VerificationReport::external(std::string claim, std::string anchor, std::string expected) {
  records.push_back({std::move(claim), std::move(anchor), "not computed", std::move(expected),
                     CheckStatus::external_reference});
}

std::string report_to_json(const VerificationReport& r, bool with_timing) {
  ordered_json j;
  j["command"] = r.command;
  j["inputs"] = ordered_json::object();
  for (const auto& [k, v] : r.inputs) j["inputs"][k] = v;
  j["records"] = ordered_json::array();
  for (const auto& c : r.records)
    j["records"].push_back({{"claim", c.claim},
                            {"anchor", c.anchor},
                            {"computed", c.computed},
                            {"expected", c.expected},
                            {"status", check_status_name(c.status)}});
  j["notes"] = r.notes;
  j["passed"] = r.passed();
  j["counts"] = {{"pass", r.count(CheckStatus::pass)},
                 {"fail", r.count(CheckStatus::fail)},
                 {"external-reference", r.count(CheckStatus::external_reference)},
                 {"unknown-group", r.count(CheckStatus::unknown_group)}};
  if (with_timing) j["timing"] = {{"seconds", r.seconds}};
  return j.dump(2) + "\n";
}

VerificationReport report_from_json(const std::string& text) {
  VerificationReport r;
  try {
    auto j = ordered_json::parse(text);
    r.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("inputs").items()) r.inputs[k] = v.get<std::string>();
    for (const auto& c : j.at("records"))
      r.records.push_back({c.at("claim").get<std::string>(), c.at("anchor").get<std::string>(),
                           c.at("computed").get<std::string>(), c.at("expected").get<std::string>(),
                           parse_check_status(c.at("status").get<std::string>())});
    if (j.contains("notes")) r.notes = j["notes"].get<std::vector<std::string>>();
    if (j.contains("timing")) r.seconds = j["timing"].at("seconds").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("report: ") + e.what());
  }
  return r;
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "verify " << r.command;
  for (const auto& [k, v] : r.inputs) os << "  " << k << "=" << v;
  os << "\n";
  for (const auto& c : r.records) {
    os << "  [" << check_status_name(c.status) << "] " << c.anchor << ": " << c.claim << "\n";
    if (c.status != CheckStatus::pass) os << "      computed " << c.computed << ", expected " << c.expected << "\n";
  }
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  os << (r.passed() ? "PASS" : "FAIL") << "  " << r.count(CheckStatus::pass) << " pass, " << r.count(CheckStatus::fail)
     << " fail, " << r.count(CheckStatus::external_reference) << " external-reference";
  if (int u = r.count(CheckStatus::unknown_group)) os << ", " << u << " unknown-group";
  os << "\n";
  return os.str();
}

}  // namespace cfl
