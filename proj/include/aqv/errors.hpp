#pragma once

#include <stdexcept>
#include <string>

namespace aqv {

/* Bad physical or structural input, rejected before any computation runs. */
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what)
      : std::invalid_argument(what) {}
};

/* A computation that started from valid input drifted or failed to converge. */
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace aqv
