#pragma once

#include <stdexcept>
#include <string>

namespace netrecon {

// Error families map onto process exit codes: usage/config -> 1,
// data -> 2, numerical failure -> 3.
struct usage_error : std::runtime_error {
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

struct data_error : std::runtime_error {
  explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

struct numerical_error : std::runtime_error {
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace netrecon
