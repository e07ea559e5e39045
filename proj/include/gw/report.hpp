#pragma once

#include <string>
#include <vector>

namespace gw {

enum class Status { Pass, Fail, Inconclusive };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

// One verified statement: pass, a certified failure with its witness, or undecided at the bound.
struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string witness;
  std::string anchor;
};

inline Check pass(std::string name, std::string witness = {}, std::string anchor = {}) {
  return {std::move(name), Status::Pass, std::move(witness), std::move(anchor)};
}
inline Check fail(std::string name, std::string witness, std::string anchor = {}) {
  return {std::move(name), Status::Fail, std::move(witness), std::move(anchor)};
}
inline Check inconclusive(std::string name, std::string why, std::string anchor = {}) {
  return {std::move(name), Status::Inconclusive, std::move(why), std::move(anchor)};
}

// Worst status wins: fail over inconclusive over pass.
inline Status combine(Status a, Status b) {
  if (a == Status::Fail || b == Status::Fail) return Status::Fail;
  if (a == Status::Inconclusive || b == Status::Inconclusive) return Status::Inconclusive;
  return Status::Pass;
}

inline Status combine(const std::vector<Check>& checks) {
  Status s = Status::Pass;
  for (const auto& c : checks) s = combine(s, c.status);
  return s;
}

}  // namespace gw
