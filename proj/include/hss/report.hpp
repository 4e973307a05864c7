#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace hss {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;  // optional extra context (e.g. "center_dim=2")
};

/// What a CLI command did: echoed command line, input digests, outputs,
/// every checked residual next to its tolerance, and wall time. Exit code 0
/// iff ok().
struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;   // file -> digest
  std::vector<std::pair<std::string, std::string>> outputs;  // key -> value
  std::vector<CheckResult> checks;
  double wall_seconds = 0.0;

  bool ok() const;
  void add_check(const std::string& name, double residual, double tolerance,
                 const std::string& note = "");
  void add_flag(const std::string& name, bool pass, const std::string& note);
  void print(std::ostream& os) const;
};

/// FNV-1a content hash of a file, rendered as hex; "missing" if unreadable.
std::string file_digest(const std::string& path);

}  // namespace hss
