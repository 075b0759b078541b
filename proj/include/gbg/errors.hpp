#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gbg {

// Malformed input or violated precondition on user-supplied data.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The request is well formed but outside what this library computes
// (dimension cap, SIP failure, multi-simplex intersection complexes).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exponential enumeration hit its configured limit.
class CapExceeded : public Unsupported {
 public:
  using Unsupported::Unsupported;
};

constexpr std::size_t kDefaultEnumCap = 1000000;

// Cap for cycle/container/subset enumerations.  GBG_ENUM_CAP overrides the default.
std::size_t enumeration_cap();

}  // namespace gbg
