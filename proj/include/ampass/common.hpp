#pragma once

#include <stdexcept>
#include <string>

namespace ampass {

/// Thrown when an input exceeds a size/resource guard (exact-range bound,
/// enumeration depth, symbolic order limit). Maps to CLI exit code 3.
class guard_error : public std::runtime_error {
public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a floating computation cannot certify the requested accuracy
/// (dual-precision disagreement).
class precision_error : public guard_error {
public:
  explicit precision_error(const std::string& what) : guard_error(what) {}
};

}  // namespace ampass
