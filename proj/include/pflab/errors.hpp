#pragma once

#include <stdexcept>
#include <string>

namespace pflab {

// Base class for everything thrown by the library on contract violations.
// Callers that just want "did it work" can catch this one type.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NotDivisible : public Error {
public:
  explicit NotDivisible(const std::string& what) : Error(what) {}
};

class NotAUnit : public Error {
public:
  explicit NotAUnit(const std::string& what) : Error(what) {}
};

class NonTerminating : public Error {
public:
  explicit NonTerminating(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

class IndexOutOfRange : public Error {
public:
  explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

class NotSquare : public Error {
public:
  explicit NotSquare(const std::string& what) : Error(what) {}
};

class OddSize : public Error {
public:
  explicit OddSize(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
public:
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class NotAMatching : public Error {
public:
  explicit NotAMatching(const std::string& what) : Error(what) {}
};

class LengthMismatch : public Error {
public:
  explicit LengthMismatch(const std::string& what) : Error(what) {}
};

class CellOutsidePartition : public Error {
public:
  explicit CellOutsidePartition(const std::string& what) : Error(what) {}
};

class LengthExceedsN : public Error {
public:
  explicit LengthExceedsN(const std::string& what) : Error(what) {}
};

class NotASubset : public Error {
public:
  explicit NotASubset(const std::string& what) : Error(what) {}
};

class ExplosionGuard : public Error {
public:
  explicit ExplosionGuard(const std::string& what) : Error(what) {}
};

class CycleError : public Error {
public:
  explicit CycleError(const std::string& what) : Error(what) {}
};

class UnknownIdentity : public Error {
public:
  explicit UnknownIdentity(const std::string& what) : Error(what) {}
};

} // namespace pflab
