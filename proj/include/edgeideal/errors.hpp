#ifndef EDGEIDEAL_ERRORS_HPP
#define EDGEIDEAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace edgeideal {

// Malformed input document.  `line` is 1-based and also baked into what().
struct parse_error : std::runtime_error {
  int line;
  parse_error(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

// A hard size limit was exceeded.  Vertex sets are machine words (64 vertices
// max) and the associated-prime oracle walks monomial divisors (20 vertices
// max); both limits are deliberate, not tunable.
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace edgeideal

#endif
