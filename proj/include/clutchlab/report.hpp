#pragma once

#include <string>
#include <vector>

namespace clutchlab {

struct Violation {
  std::string kind;        // "cocycle", "identity", "reflexivity", "symmetry", ...
  std::vector<int> where;  // indices of the failing identity
  double residual = 0.0;
};

struct ValidationReport {
  std::vector<Violation> violations;
  double worst_residual = 0.0;

  bool ok() const { return violations.empty(); }
  bool has(const std::string& kind) const {
    for (const auto& v : violations)
      if (v.kind == kind) return true;
    return false;
  }
};

}  // namespace clutchlab
