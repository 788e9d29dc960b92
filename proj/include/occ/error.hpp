#pragma once

#include <iostream>
#include <stdexcept>
#include <string>

namespace occ {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by sensitivity() when no margin point exists; callers route the
// degenerate case through empty_s_step() instead.
struct EmptyMarginSet : Error {
  EmptyMarginSet() : Error("margin set is empty") {}
};

inline void log_warn(const std::string& msg) {
  std::cerr << "warning: " << msg << "\n";
}

}  // namespace occ
