#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "naef/cnf.hpp"

namespace naef {

class dimacs_error : public std::runtime_error {
 public:
  dimacs_error(size_t line, const std::string& msg)
      : std::runtime_error("dimacs: line " + std::to_string(line) + ": " + msg),
        line_(line) {}

  size_t line() const { return line_; }

 private:
  size_t line_;
};

// Standard DIMACS CNF: "p cnf <n> <m>" header, 1-indexed signed literals,
// clauses terminated by 0, comment lines starting with 'c'. The clause
// count must match the header and widths must be uniform.
Cnf parse_dimacs(std::string_view text);

std::string write_dimacs(const Cnf& f);
void write_dimacs(const Cnf& f, std::ostream& os);

}  // namespace naef
