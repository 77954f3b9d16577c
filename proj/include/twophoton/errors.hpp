#pragma once

#include <stdexcept>
#include <string>

namespace twophoton {

// Invalid configuration or unparsable input. CLI maps these to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

class ParseError : public ConfigError {
 public:
  explicit ParseError(const std::string& what) : ConfigError(what) {}
};

// A polynomial handed to visibility extraction that is not of the
// fringe form c0 + c1*cos(theta) with c0 >= |c1|.
class NotFringeForm : public ConfigError {
 public:
  explicit NotFringeForm(const std::string& what) : ConfigError(what) {}
};

class ScanTooCoarse : public ConfigError {
 public:
  explicit ScanTooCoarse(const std::string& what) : ConfigError(what) {}
};

// Numerical failure at runtime. CLI maps these to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

class QuadratureNotConverged : public NumericalError {
 public:
  explicit QuadratureNotConverged(const std::string& what) : NumericalError(what) {}
};

// Asked for a closed form outside the regime where it is valid.
class RegimeError : public NumericalError {
 public:
  explicit RegimeError(const std::string& what) : NumericalError(what) {}
};

}  // namespace twophoton
