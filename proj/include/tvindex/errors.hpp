#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tvi {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// validate_setup reported at least one issue.
class InvalidSetup : public Error {
 public:
  InvalidSetup(const std::string& what, std::vector<std::string> issues)
      : Error(what), issues_(std::move(issues)) {}

  const std::vector<std::string>& issues() const { return issues_; }

 private:
  std::vector<std::string> issues_;
};

// Some tangent weight is orthogonal to the slope vector.
class DegenerateWeight : public Error {
 public:
  using Error::Error;
};

class NotNormalized : public Error {
 public:
  using Error::Error;
};

class NegativeCutoff : public Error {
 public:
  using Error::Error;
};

class WrongOperatorKind : public Error {
 public:
  using Error::Error;
};

class ZeroB : public Error {
 public:
  using Error::Error;
};

class InfiniteMultiplicity : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidTau : public Error {
 public:
  using Error::Error;
};

class NonIntegral : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace tvi
