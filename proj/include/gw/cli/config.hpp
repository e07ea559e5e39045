#pragma once

// Case configuration files: `key = value` lines with integers, quoted strings or arrays of
// quoted strings, `#` comments, and `[params]` for case-specific polynomial parameters.
//
//   case = "sheaf"
//   bound = 8
//   [params]
//   cover = ["X", "Y"]

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gw/errors.hpp"

namespace gw::cli {

struct CaseConfig {
  std::string name;
  std::optional<int> bound;
  std::optional<int> depth;
  std::optional<int> power_bound;
  std::optional<int> samples;
  std::map<std::string, std::vector<std::string>> params;
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

struct Value {
  enum class Kind { Int, String, List } kind = Kind::Int;
  long long number = 0;
  std::vector<std::string> items;
};

inline std::string parse_string(const std::string& s, std::size_t& i, int line_no) {
  if (i >= s.size() || s[i] != '"') throw ConfigError("line " + std::to_string(line_no) + ": expected '\"'");
  std::string out;
  for (++i; i < s.size() && s[i] != '"'; ++i) out += s[i];
  if (i == s.size()) throw ConfigError("line " + std::to_string(line_no) + ": unterminated string");
  ++i;
  return out;
}

inline Value parse_value(const std::string& s, int line_no) {
  const std::string where = "line " + std::to_string(line_no) + ": ";
  Value v;
  if (s.empty()) throw ConfigError(where + "missing value");
  std::size_t i = 0;
  if (s[0] == '"') {
    v.kind = Value::Kind::String;
    v.items.push_back(parse_string(s, i, line_no));
  } else if (s[0] == '[') {
    v.kind = Value::Kind::List;
    ++i;
    for (;;) {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
      if (i < s.size() && s[i] == ']') break;
      v.items.push_back(parse_string(s, i, line_no));
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      if (i < s.size() && s[i] == ']') break;
      throw ConfigError(where + "malformed list");
    }
    ++i;
  } else {
    std::size_t used = 0;
    try {
      v.number = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw ConfigError(where + "expected an integer, a string or a list, got '" + s + "'");
    }
    i = used;
  }
  if (trim(s.substr(i)).size()) throw ConfigError(where + "trailing characters after value");
  return v;
}

}  // namespace detail

inline CaseConfig parse_config(const std::string& text) {
  CaseConfig cfg;
  std::istringstream in(text);
  std::string raw, section;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    std::string line = detail::trim(detail::strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where + "malformed section header");
      section = detail::trim(line.substr(1, line.size() - 2));
      if (section != "params") throw ConfigError(where + "unknown section [" + section + "]");
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + "expected key = value");
    std::string key = detail::trim(line.substr(0, eq));
    auto v = detail::parse_value(detail::trim(line.substr(eq + 1)), line_no);
    if (section == "params") {
      if (v.kind == detail::Value::Kind::Int) throw ConfigError(where + "parameter " + key + " must be a string or list");
      if (!cfg.params.emplace(key, v.items).second) throw ConfigError(where + "duplicate parameter " + key);
      continue;
    }
    if (key == "case") {
      if (v.kind != detail::Value::Kind::String) throw ConfigError(where + "case must be a string");
      cfg.name = v.items.front();
      continue;
    }
    std::optional<int>* slot = key == "bound"         ? &cfg.bound
                               : key == "depth"       ? &cfg.depth
                               : key == "power_bound" ? &cfg.power_bound
                               : key == "samples"     ? &cfg.samples
                                                      : nullptr;
    if (!slot) throw ConfigError(where + "unknown key " + key);
    if (v.kind != detail::Value::Kind::Int) throw ConfigError(where + key + " must be an integer");
    if (v.number <= 0 || v.number > 1000) throw ConfigError(where + key + " must lie in 1..1000");
    *slot = static_cast<int>(v.number);
  }
  return cfg;
}

inline CaseConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

}  // namespace gw::cli
