#pragma once

#include <cmath>

#include "qhz/qcore.hpp"

namespace testing {

inline double rel_err(qhz::Complex a, qhz::Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}


}  // namespace testing
