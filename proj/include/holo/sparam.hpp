#pragma once

#include "holo/errors.hpp"

namespace holo::hermite {

/// The space parameter s, 0 < s < 1.
class SParam {
 public:
  explicit SParam(double s) : s_(s) {
    if (!(s > 0.0 && s < 1.0)) throw ParameterError("s must lie in (0, 1)");
  }
  [[nodiscard]] double value() const { return s_; }
  operator double() const { return s_; }  // NOLINT(google-explicit-constructor)

 private:
  double s_;
};

}  // namespace holo::hermite
