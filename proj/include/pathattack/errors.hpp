#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathattack {

// Base class for every error raised by the library. Conditions that are part
// of normal control flow (an unreachable target, an exhausted path sequence)
// are reported through return values instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DuplicateEdge : public Error {
 public:
  using Error::Error;
};

class SelfLoop : public Error {
 public:
  using Error::Error;
};

class NegativeValue : public Error {
 public:
  using Error::Error;
};

class EmptyGraph : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A path that must be cut consists only of protected elements.
class InfeasibleCover : public Error {
 public:
  using Error::Error;
};

class InfeasibleInstance : public Error {
 public:
  using Error::Error;
};

class ResourceExhausted : public Error {
 public:
  using Error::Error;
};

class IterationCap : public Error {
 public:
  using Error::Error;
};

class NumericalInstability : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

// A baseline met a competing path whose edges are all protected.
class Stuck : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

class NoCandidate : public Error {
 public:
  using Error::Error;
};

class Exhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace pathattack
