#pragma once

#include <string>
#include <vector>

namespace quadhopf {

enum class Status { pass, fail, degenerate };
std::string_view to_string(Status s);

/// One named check. `detail` carries a witness on failure, or a short note.
struct Check {
  std::string id;
  Status status = Status::fail;
  std::string detail;

  bool ok() const { return status != Status::fail; }
};

Check make_check(std::string id, bool ok, std::string detail = {});
bool all_ok(const std::vector<Check>& checks);

}  // namespace quadhopf
