#pragma once

#include <stdexcept>
#include <string>

namespace depthlab {

// Raised when a config file cannot be loaded or fails validation.
// Never raised at run time by machine execution.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a run would exceed a configured cap (interval index,
// position extent, output size, ...). Always carries enough context to
// locate the offending stage or operation.
class cap_error : public std::runtime_error {
 public:
  explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal invariant failures; indicates a bug, not bad input.
class invariant_error : public std::logic_error {
 public:
  explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace depthlab
