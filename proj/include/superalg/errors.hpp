#ifndef SUPERALG_ERRORS_HPP
#define SUPERALG_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace superalg {

/// Base class of every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A computation needs a field extension of the rationals (an idempotent or
/// eigenvalue that is not rational).
class SplitRequired : public Error {
 public:
  using Error::Error;
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

class DegenerateForm : public Error {
 public:
  using Error::Error;
};

/// The algebra has no proper nonzero graded ideal.
class SimpleAlgebra : public Error {
 public:
  using Error::Error;
};

/// An operation's documented precondition does not hold for the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A list of violated conditions, each with its witnessing indices.
class ConditionViolation : public Error {
 public:
  explicit ConditionViolation(std::vector<std::string> items)
      : Error(join(items)), items_(std::move(items)) {}

  const std::vector<std::string>& items() const noexcept { return items_; }

 private:
  static std::string join(const std::vector<std::string>& items) {
    std::string out = "violated conditions:";
    for (const auto& item : items) {
      out += "\n  - ";
      out += item;
    }
    return out;
  }

  std::vector<std::string> items_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace superalg

#endif  // SUPERALG_ERRORS_HPP
