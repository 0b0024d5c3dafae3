#ifndef WLCIRC_ERRORS_HPP
#define WLCIRC_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wlcirc {

/// Input that violates a documented precondition (bad connection set,
/// malformed file, out-of-range point, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource cap was hit (tuple-space size, search nodes).
/// Callers that can degrade to an "undecided" outcome catch this.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural guarantee that the theory promises did not hold at runtime.
/// Reaching this means a bug (or a genuinely contradicting instance, which
/// the caller is expected to log rather than swallow).
class InternalInvariantFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Node budget for backtracking searches.
struct SearchLimits {
  long long max_nodes = 10'000'000;
};

struct SearchStats {
  long long nodes = 0;
};

}  // namespace wlcirc

#endif
