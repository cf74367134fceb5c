#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace qhz {

using Complex = std::complex<double>;

/// A point n + m*delta of the pole lattice of the q-Hurwitz zeta function
/// together with its residue.
struct PoleDescriptor {
  int n = 0;
  long m = 0;
  Complex location;
  Complex residue;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition or domain violation (argument outside the region where the
/// requested representation is defined).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A series or quadrature did not reach its tolerance within its budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Numeric overflow (a term or an intermediate left the double range).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Argument is a pole of the Gamma function.
class GammaPoleError : public Error {
 public:
  using Error::Error;
};

/// Evaluation refused because the argument lies within the pole guard of a
/// pole; the nearest pole is attached.
class NearPoleError : public Error {
 public:
  NearPoleError(const std::string& what, PoleDescriptor pole)
      : Error(what), pole_(pole) {}

  const PoleDescriptor& pole() const noexcept { return pole_; }

 private:
  PoleDescriptor pole_;
};

}  // namespace qhz
