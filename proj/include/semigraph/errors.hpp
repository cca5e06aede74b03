#pragma once

#include <stdexcept>
#include <string>

namespace semigraph {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A table entry lies outside [0, n).
class NotClosedError : public Error {
public:
  NotClosedError(int row, int col, int value, int order);
  int row, col, value;
};

/// Associativity fails; (i, j, k) is a witness triple with
/// (i*j)*k != i*(j*k).
class NotAssociativeError : public Error {
public:
  NotAssociativeError(int i, int j, int k);
  int i, j, k;
};

class InvalidParamsError : public Error {
public:
  explicit InvalidParamsError(const std::string& what) : Error(what) {}
};

class NotIdempotentError : public Error {
public:
  explicit NotIdempotentError(int element);
  int element;
};

/// Requested order exceeds a hard cap (enumeration, canonical forms).
class OrderCapError : public Error {
public:
  OrderCapError(int order, int cap);
  int order, cap;
};

/// Input too large for an exact solver.
class SizeLimitError : public Error {
public:
  SizeLimitError(const std::string& solver, int size, int limit);
  int size, limit;
};

class ConstructionFailedError : public Error {
public:
  explicit ConstructionFailedError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace semigraph
