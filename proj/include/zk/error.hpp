#pragma once

#include <stdexcept>
#include <string>

namespace zk {

// Violated precondition of a library call (wrong space tag, bad exponent, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Rejected run configuration. Messages name the offending field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite values or an unrecoverable accuracy failure during integration.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double time)
      : std::runtime_error(what), time_(time) {}
  double time() const { return time_; }

 private:
  double time_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zk
