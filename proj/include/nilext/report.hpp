#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace nilext {

/// Outcome of one check. `fail` is the only status that makes a report fail;
/// `reported` marks a recorded mismatch that is not asserted and `info` a
/// computed value that is not a check at all.
enum class Status { pass, fail, undecided, reported, skipped, info };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::undecided: return "undecided";
    case Status::reported: return "reported";
    case Status::skipped: return "skipped";
    case Status::info: return "info";
  }
  return "?";
}

struct Record {
  std::string check_id;
  std::string entry_id;
  std::string params;
  Status status = Status::pass;
  std::string detail;
};

struct Report {
  static constexpr const char* schema_name = "nilext-report/1";

  std::string scope;
  std::vector<Record> records;

  void add(Record r) { records.push_back(std::move(r)); }
  void append(const Report& other) { records.insert(records.end(), other.records.begin(), other.records.end()); }

  std::size_t count(Status s) const {
    std::size_t k = 0;
    for (const auto& r : records) k += r.status == s;
    return k;
  }
  bool ok() const { return count(Status::fail) == 0; }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = schema_name;
    j["scope"] = scope;
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : records)
      j["records"].push_back({{"check_id", r.check_id},
                              {"entry_id", r.entry_id},
                              {"params", r.params},
                              {"status", to_string(r.status)},
                              {"detail", r.detail}});
    j["summary"] = {{"pass", count(Status::pass)},         {"fail", count(Status::fail)},
                    {"undecided", count(Status::undecided)}, {"reported", count(Status::reported)},
                    {"skipped", count(Status::skipped)}};
    return j;
  }

  std::string to_text() const {
    std::string s;
    for (const auto& r : records) {
      s += "[" + to_string(r.status) + "] " + r.check_id + " " + r.entry_id;
      if (!r.params.empty() && r.params != "()") s += r.params;
      if (!r.detail.empty()) s += ": " + r.detail;
      s += "\n";
    }
    if (count(Status::info) == records.size()) return s;
    s += "summary: " + std::to_string(count(Status::pass)) + " pass, " + std::to_string(count(Status::fail)) +
         " fail, " + std::to_string(count(Status::undecided)) + " undecided, " +
         std::to_string(count(Status::reported)) + " reported, " + std::to_string(count(Status::skipped)) +
         " skipped\n";
    return s;
  }
};

/// Checks that a structured report carries the expected fields and types.
inline bool valid_report_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("schema", "") != Report::schema_name) return false;
  if (!j.contains("records") || !j["records"].is_array()) return false;
  for (const auto& r : j["records"]) {
    for (const char* k : {"check_id", "entry_id", "params", "status", "detail"})
      if (!r.contains(k) || !r[k].is_string()) return false;
    std::string st = r["status"];
    if (st != "pass" && st != "fail" && st != "undecided" && st != "reported" && st != "skipped" &&
        st != "info") return false;
  }
  return true;
}

}  // namespace nilext
