#pragma once

#include <stdexcept>
#include <string>

namespace mockeis {

// Every failure the library reports derives from Error so callers (the CLI in
// particular) can separate domain errors from programming errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroConstantTerm : public Error {
 public:
  ZeroConstantTerm() : Error("series has zero constant term; not invertible") {}
};

class BadConstantTerm : public Error {
 public:
  using Error::Error;
};

class FractionalExponent : public Error {
 public:
  using Error::Error;
};

class ConventionCase : public Error {
 public:
  using Error::Error;
};

class WindowTooLarge : public Error {
 public:
  using Error::Error;
};

class WindowUnderflow : public Error {
 public:
  using Error::Error;
};

class MissingMember : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A b-file was requested for a series with a non-integer coefficient.
class NonIntegralSeries : public Error {
 public:
  using Error::Error;
};

}  // namespace mockeis
