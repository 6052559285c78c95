#pragma once

#include <stdexcept>
#include <string>

namespace qweyl {

/// Input matrix failed a unitarity check. Carries the measured deviation
/// max|(U†U - I)_jk|.
class NotUnitaryError : public std::runtime_error {
 public:
  NotUnitaryError(const std::string& what, double deviation)
      : std::runtime_error(what), deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

/// Eigenvalue iteration failed; signals a malformed input matrix.
class NoConvergenceError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// State vector is not normalized to 1 within tolerance.
class NotNormalizedError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Family parameter outside the closed range of its table row.
class ParamOutOfRangeError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed gate file or tolerance file.
class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qweyl
