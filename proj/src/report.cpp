#include "quadhopf/report.hpp"

#include <algorithm>

namespace quadhopf {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::degenerate: return "degenerate";
  }
  return "fail";
}

Check make_check(std::string id, bool ok, std::string detail) {
  return {std::move(id), ok ? Status::pass : Status::fail, std::move(detail)};
}

bool all_ok(const std::vector<Check>& checks) {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok(); });
}

}  // namespace quadhopf
