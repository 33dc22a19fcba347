#pragma once

#include <stdexcept>
#include <string>

namespace zagier {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A constructor precondition failed (zero where a unit is required,
// coincident points, an argument equal to 0 or 1).
class DegenerateArgument : public Error {
 public:
  using Error::Error;
};

// Iterated integral with a0 == a1 or an == a_end outside regularized mode.
class DivergentTerm : public Error {
 public:
  using Error::Error;
};

class BranchAmbiguity : public Error {
 public:
  using Error::Error;
};

class PathError : public Error {
 public:
  using Error::Error;
};

class InvalidDiscriminant : public Error {
 public:
  using Error::Error;
};

class DegenerateWitness : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  [[nodiscard]] std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace zagier
