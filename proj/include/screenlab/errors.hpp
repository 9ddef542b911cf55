#ifndef SCREENLAB_ERRORS_HPP
#define SCREENLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace screenlab {

// Bad instance files, violated model invariants.  CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A precondition on a numeric routine failed (mean not matchable, infeasible
// signal, ...).
class InfeasibleError : public std::runtime_error {
public:
  explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

// An asserted numerical identity failed beyond tolerance.  CLI exit code 3.
class VerificationError : public std::runtime_error {
public:
  explicit VerificationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Instance exceeds a configured size limit.  CLI exit code 4.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace screenlab

#endif
