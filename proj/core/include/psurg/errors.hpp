#pragma once

#include <stdexcept>
#include <string>

namespace psurg {

// Base of every error raised by the library. The CLI maps subclasses to exit
// codes, so new error kinds should derive from the closest existing one.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ZeroAxis : public InvalidArgument {
 public:
  ZeroAxis() : InvalidArgument("rotation axis has zero length") {}
};

class NonCommuting : public Error {
 public:
  explicit NonCommuting(double gap)
      : Error("holonomies do not commute (commutator norm " +
              std::to_string(gap) + ")"),
        gap_(gap) {}
  double gap() const noexcept { return gap_; }

 private:
  double gap_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InconsistentPD : public ParseError {
 public:
  using ParseError::ParseError;
};

class MultiComponentLink : public ParseError {
 public:
  explicit MultiComponentLink(int components)
      : ParseError("input describes a link with " + std::to_string(components) +
                   " components; only knots are supported"),
        components_(components) {}
  int components() const noexcept { return components_; }

 private:
  int components_;
};

class NotCoprime : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class IndexOutOfRange : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InvalidSlope : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Slope outside the range where the exclusion arc is defined (p/q > 2, or a
// non-positive p or q).
class SlopeOutOfRange : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class Infeasible : public Error {
 public:
  using Error::Error;
};

class ConventionMismatch : public Error {
 public:
  using Error::Error;
};

class PresentationMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace psurg
