#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace hss {

struct ShellOptions {
  double tol = 1e-9;             // construction tolerance epsilon
  std::uint64_t seed = 20260815;  // randomized suites
  bool parallel = false;
};

/// Move request for cmd_move. `kind` is one of pachner22 / pachner13 /
/// pachner31 / shift; the other fields are read as the kind requires.
struct MoveSpec {
  std::string kind;
  long index = -1;     // pachner22: gluing index
  long triangle = -1;  // pachner13 / pachner31
  long corner = -1;    // pachner31
  long from = -1;      // shift
  long to = -1;        // shift
};

// Commands return the process exit code: 0 success, 1 input/validation
// error, 2 numerical failure (singular metric, overflow), 3 acceptance
// failure. Structured results go to `out`; diagnostics go to `err`.

int cmd_check_algebra(const std::string& algebra_file,
                      const std::string& group_file,
                      const std::string& action_file, const ShellOptions& opts,
                      std::ostream& out);

int cmd_statesum(const std::string& surface_file,
                 const std::string& algebra_file, const std::string& group_file,
                 const std::string& action_file, bool with_oracle,
                 double oracle_guard, double size_cap, const ShellOptions& opts,
                 std::ostream& out);

int cmd_oracle(const std::string& surface_file, const std::string& algebra_file,
               const std::string& group_file, const std::string& action_file,
               double oracle_guard, const ShellOptions& opts,
               std::ostream& out);

int cmd_move(const std::string& surface_file, const std::string& group_file,
             const MoveSpec& move, const std::string& out_file,
             const ShellOptions& opts, std::ostream& out);

int cmd_cobord(const std::string& expression, const std::string& algebra_file,
               const std::string& group_file, const std::string& action_file,
               const ShellOptions& opts, std::ostream& out);

int cmd_genus(int h, const std::vector<long>& cls,
              const std::string& algebra_file, const std::string& group_file,
              const std::string& action_file, const ShellOptions& opts,
              std::ostream& out);

int cmd_acceptance(const ShellOptions& opts, std::ostream& out);

/// Run `body`, mapping a thrown Error to the documented exit code
/// (SingularMetric / PlanOverflow / TooLarge -> 2, everything else -> 1)
/// and printing "error: <Kind>: <detail>" to `err`.
int run_guarded(const std::function<int()>& body, std::ostream& err);

}  // namespace hss
