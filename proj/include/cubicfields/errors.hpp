#pragma once

#include <stdexcept>
#include <string>

namespace cubicfields {

// A query needs field data beyond what the store was built or loaded with.
struct coverage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed table input; line is 1-based (header = line 1).
struct parse_error : std::runtime_error {
  parse_error(const std::string& msg, long line_no)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
  long line;
};

// A declared resource limit (oracle bound, enumeration size) was exceeded.
struct limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cubicfields
