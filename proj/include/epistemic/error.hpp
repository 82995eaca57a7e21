#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace epi {

// Base for every error raised by the workbench.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, std::string message,
              std::vector<std::string> expected = {});

  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

// Malformed model file or out-of-range world index.
class ModelError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (e.g. a conditional handed to
// the K45 normal-form engine, or an invalid occurrence path).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Atom budget, subset blowup, or translation size cap exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace epi
