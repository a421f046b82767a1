#ifndef LIEALG_REPORT_HPP
#define LIEALG_REPORT_HPP

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

namespace liealg
{

  /// Outcome of one named check: residual magnitude plus, on failure, the
  /// location of the first violation (index tuple, basis pair, ...).
  struct CheckResult
  {
    std::string name;
    bool passed = true;
    double max_residual = 0.0;
    std::string detail;
  };

  /// A list of check outcomes. Failures are content, not errors.
  struct VerificationReport
  {
    std::vector<CheckResult> checks;

    bool passed() const
    {
      for (const auto & c : checks) {
        if (!c.passed) return false;
      }
      return true;
    }

    double max_residual() const
    {
      double r = 0.0;
      for (const auto & c : checks) {
        r = std::max(r, c.max_residual);
      }
      return r;
    }

    const CheckResult * find(std::string_view name) const
    {
      for (const auto & c : checks) {
        if (c.name == name) return &c;
      }
      return nullptr;
    }
  };

}

#endif
