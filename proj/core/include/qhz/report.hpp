#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qhz/qcore.hpp"

namespace qhz {

/// One identity instance checked numerically: both sides and their gap.
struct EvalReport {
  std::string identity;
  std::vector<std::pair<std::string, Complex>> inputs;
  Complex lhs;
  Complex rhs;
  double abs_diff = 0.0;
  double rel_diff = 0.0;
  bool pass = false;
};

/// Fills abs_diff, rel_diff (relative to max(|lhs|, |rhs|)) and pass, which
/// holds when rel_diff <= rel_tol or abs_diff <= abs_tol.
EvalReport make_report(std::string identity,
                       std::vector<std::pair<std::string, Complex>> inputs,
                       Complex lhs, Complex rhs, double rel_tol,
                       double abs_tol = 0.0);

}  // namespace qhz
