#pragma once

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gw/errors.hpp"
#include "gw/report.hpp"

namespace gw::cli {

struct Report {
  std::string case_name;
  std::vector<std::pair<std::string, int>> bounds;  // in declaration order
  std::vector<Check> checks;
  std::vector<Report> cases;  // per-case subreports of an aggregate

  Status status() const {
    Status s = combine(checks);
    for (const auto& c : cases) s = combine(s, c.status());
    return s;
  }

  std::size_t count(Status s) const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.status == s ? 1 : 0;
    for (const auto& c : cases) n += c.count(s);
    return n;
  }
};

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["case"] = r.case_name;
  j["bounds"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.bounds) j["bounds"][k] = v;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back({{"name", c.name}, {"status", status_name(c.status)}, {"witness", c.witness}, {"anchor", c.anchor}});
  if (!r.cases.empty()) {
    j["cases"] = nlohmann::ordered_json::array();
    for (const auto& c : r.cases) j["cases"].push_back(to_json(c));
  }
  return j;
}

inline std::string report_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

inline void emit_text(const Report& r, std::ostream& os, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  os << pad << r.case_name;
  for (std::size_t i = 0; i < r.bounds.size(); ++i)
    os << (i ? ", " : " (") << r.bounds[i].first << " " << r.bounds[i].second << (i + 1 == r.bounds.size() ? ")" : "");
  os << "\n";
  for (const auto& c : r.checks) {
    os << pad << "  " << std::left << std::setw(13) << status_name(c.status) << c.name;
    if (!c.witness.empty()) os << "  [" << c.witness << "]";
    os << "\n";
  }
  for (const auto& c : r.cases) emit_text(c, os, indent + 2);
  if (indent == 0)
    os << "pass " << r.count(Status::Pass) << ", fail " << r.count(Status::Fail) << ", inconclusive "
       << r.count(Status::Inconclusive) << "\n";
}

inline std::string report_text(const Report& r) {
  std::ostringstream os;
  emit_text(r, os);
  return os.str();
}

// "-" writes to stdout.
inline void write_file(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::fwrite(content.data(), 1, content.size(), stdout);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path + " for writing");
  f << content;
  if (!f) throw Error("write to " + path + " failed");
}

}  // namespace gw::cli
