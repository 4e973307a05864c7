#include "hss/report.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace hss {

bool RunReport::ok() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

void RunReport::add_check(const std::string& name, double residual,
                          double tolerance, const std::string& note) {
  checks.push_back(
      CheckResult{name, residual, tolerance, residual <= tolerance, note});
}

void RunReport::add_flag(const std::string& name, bool pass,
                         const std::string& note) {
  checks.push_back(CheckResult{name, pass ? 0.0 : 1.0, 0.0, pass, note});
}

void RunReport::print(std::ostream& os) const {
  os << "command: " << command << "\n";
  for (const auto& [file, digest] : inputs)
    os << "input: " << file << " fnv1a=" << digest << "\n";
  for (const auto& [key, value] : outputs)
    os << "output: " << key << " = " << value << "\n";
  for (const CheckResult& c : checks) {
    os << "check: " << std::left << std::setw(34) << c.name << std::right
       << " residual " << std::scientific << std::setprecision(3)
       << c.residual << "  tol " << c.tolerance << "  "
       << (c.pass ? "PASS" : "FAIL");
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << "\n" << std::defaultfloat;
  }
  os << "wall_seconds: " << wall_seconds << "\n";
  os << "result: " << (ok() ? "PASS" : "FAIL") << "\n";
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "missing";
  std::uint64_t h = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace hss
