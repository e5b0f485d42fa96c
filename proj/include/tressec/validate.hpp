#pragma once

#include <string>
#include <vector>

#include "tressec/json_io.hpp"

namespace tressec::io {

struct InvariantLine {
  std::string name;
  bool ok = false;
  bool skipped = false;  // an earlier failure made the check unreachable
  std::string detail;
};

struct ValidationReport {
  bool ok = false;
  std::vector<InvariantLine> lines;
  json properties = json::object();  // informational, not pass/fail
};

/// Runs the full invariant suite of the payload's kind.  Structural problems
/// (wrong JSON shape) raise parse_error; domain violations come back as
/// failed lines.
ValidationReport validate_payload(Kind kind, const json& payload);

json report_to_json(Kind kind, const ValidationReport& report);

}  // namespace tressec::io
