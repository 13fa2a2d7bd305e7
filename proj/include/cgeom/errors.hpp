#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgeom/subset.hpp"

namespace cgeom {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad labels, masks outside the ground set, bad arguments.
class InputError : public Error {
public:
  using Error::Error;
};

/// A set family failed one of the three convex-geometry axioms.
///
/// `axiom` is 1, 2 or 3. The witness lists the offending sets: the missing
/// set for axiom 1, the pair X, Y and their intersection for axiom 2, and the
/// proper closed set without a one-element extension for axiom 3.
class AxiomViolation : public Error {
public:
  AxiomViolation(int axiom, std::vector<SubsetMask> witness, const std::string& what)
      : Error(what), axiom_(axiom), witness_(std::move(witness)) {}

  int axiom() const noexcept { return axiom_; }
  const std::vector<SubsetMask>& witness() const noexcept { return witness_; }

private:
  int axiom_;
  std::vector<SubsetMask> witness_;
};

class NotALattice : public Error {
public:
  using Error::Error;
};

class NotComparable : public Error {
public:
  using Error::Error;
};

class NotClosed : public Error {
public:
  using Error::Error;
};

class NotNested : public Error {
public:
  using Error::Error;
};

class NotMeetDistributive : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class DuplicatePoints : public Error {
public:
  using Error::Error;
};

/// Text-format error carrying the source name and 1-based line number.
class ParseError : public Error {
public:
  ParseError(std::string source, std::size_t line, const std::string& message)
      : Error(source + ":" + std::to_string(line) + ": " + message),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

private:
  std::string source_;
  std::size_t line_;
};

}  // namespace cgeom
