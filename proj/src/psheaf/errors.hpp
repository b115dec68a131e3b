#pragma once
#include <stdexcept>
#include <string>

namespace psheaf {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// contract misuse: mixed rings, zero where nonzero is required, ambient mismatch
struct value_error : error {
  using error::error;
};

// theorem-level hypothesis not satisfied (non-faithful module, empty open, zero module)
struct precondition_error : error {
  using error::error;
};

// desk-scale enumeration / factoring guards
struct guard_error : error {
  using error::error;
};

struct not_a_cover_error : error {
  using error::error;
};

struct incompatible_sections_error : error {
  using error::error;
};

struct parse_error : error {
  parse_error(const std::string& msg, int line, int col)
      : error(msg), line(line), col(col) {}
  int line = 0;
  int col = 0;
};

}  // namespace psheaf
