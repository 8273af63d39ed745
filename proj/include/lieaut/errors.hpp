#pragma once

#include <stdexcept>
#include <string>

namespace lieaut {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Inadmissible (family, rank) pair.
class InvalidType : public Error {
public:
  using Error::Error;
};

/// Sublattice not contained in the superlattice, or ranks differ.
class LatticeError : public Error {
public:
  using Error::Error;
};

/// Rank-one root systems have a single hyperplane, hence no pairs.
class EmptyPairSet : public Error {
public:
  using Error::Error;
};

class InvalidDegree : public Error {
public:
  using Error::Error;
};

class GenusOutOfRange : public Error {
public:
  using Error::Error;
};

/// A ramification entry whose local delta would be negative or non-integral.
class InconsistentProfile : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace lieaut
