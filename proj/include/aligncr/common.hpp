#pragma once

#include <stdexcept>
#include <string>

namespace aligncr {

// Error taxonomy mapped to CLI exit codes: usage 1, data 2, numeric 3.
struct usage_error : std::runtime_error {
  explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct data_error : std::runtime_error {
  explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require_data(bool ok, const std::string& msg) {
  if (!ok) throw data_error(msg);
}

inline void require_usage(bool ok, const std::string& msg) {
  if (!ok) throw usage_error(msg);
}

}  // namespace aligncr
