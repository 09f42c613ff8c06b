#pragma once

#include <stdexcept>
#include <string>

namespace eulermerge {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or semantically invalid input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string& label)
      : Error("unknown set label '" + label + "'"), label_(label) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

class UnknownElement : public Error {
 public:
  explicit UnknownElement(const std::string& element)
      : Error("element '" + element + "' is not in the universe"), element_(element) {}
  const std::string& element() const noexcept { return element_; }

 private:
  std::string element_;
};

// A documented precondition of an operation was not met by the caller.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace eulermerge
