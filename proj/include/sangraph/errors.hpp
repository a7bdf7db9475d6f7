#pragma once

#include <stdexcept>
#include <string>

namespace sangraph {

// Base class for all library errors. The CLI maps subclasses onto exit codes,
// so every throw site uses the most specific type available.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class MalformedDate : public Error {
 public:
  using Error::Error;
};

class BadCountryCode : public Error {
 public:
  using Error::Error;
};

class MissingFinal : public Error {
 public:
  using Error::Error;
};

class UnknownAction : public Error {
 public:
  using Error::Error;
};

class EmptyBins : public Error {
 public:
  using Error::Error;
};

class UnknownEdge : public Error {
 public:
  using Error::Error;
};

class EmptyGraph : public Error {
 public:
  using Error::Error;
};

class EmptyTerm : public Error {
 public:
  using Error::Error;
};

class InfeasibleConfig : public Error {
 public:
  using Error::Error;
};

// Parameter-domain violations not covered by a named error above
// (non-positive delta, overlapping bins, replicates < 1, ...).
class InvalidParams : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sangraph
