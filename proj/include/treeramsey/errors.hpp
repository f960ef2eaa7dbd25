#pragma once

#include <stdexcept>
#include <string>

namespace treeramsey {

/// Raised when a bounded search runs out of tree below the truncation depth.
/// This is the only way truncation unsoundness surfaces; no operation ever
/// returns a wrong answer because of a too-shallow host.
class DepthExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by brute-force oracles when the instance exceeds the configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace treeramsey
