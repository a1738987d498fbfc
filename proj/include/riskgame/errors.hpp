#pragma once

#include <stdexcept>
#include <string>

namespace riskgame {

// Configuration / validation failure (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Model is degenerate for the requested computation, e.g. no experience can
// ever be recorded (CLI exit code 3).
class DegenerateModelError : public std::runtime_error {
 public:
  explicit DegenerateModelError(const std::string& what)
      : std::runtime_error(what) {}
};

// File-system failure (CLI exit code 4).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace riskgame
