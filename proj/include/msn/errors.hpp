#pragma once

#include <stdexcept>
#include <string>

namespace msn {

// Invalid arguments: bad parameter ranges, malformed input, unknown names.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact arithmetic that has no value, e.g. division by zero.
class arithmetic_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class singular_matrix_error : public std::runtime_error {
 public:
  explicit singular_matrix_error(std::size_t row)
      : std::runtime_error("singular matrix: no nonzero pivot for row " +
                           std::to_string(row)),
        row_(row) {}

  // Elimination step at which every remaining pivot candidate was zero.
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

}  // namespace msn
