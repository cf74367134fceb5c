#include "qhz/report.hpp"

namespace qhz {

EvalReport make_report(std::string identity,
                       std::vector<std::pair<std::string, Complex>> inputs,
                       Complex lhs, Complex rhs, double rel_tol,
                       double abs_tol) {
  EvalReport r;
  r.identity = std::move(identity);
  r.inputs = std::move(inputs);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_diff = std::abs(lhs - rhs);
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  r.rel_diff = scale > 0.0 ? r.abs_diff / scale : 0.0;
  r.pass = is_finite(lhs) && is_finite(rhs) &&
           (r.rel_diff <= rel_tol || r.abs_diff <= abs_tol);
  return r;
}

}  // namespace qhz
