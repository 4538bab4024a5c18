#pragma once

#include <stdexcept>
#include <string>

namespace qhb {

// Base class for all domain errors thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Quiver/algebra construction.
class MalformedQuiver : public Error {
 public:
  using Error::Error;
};

// Thrown by basis enumeration when the bound quiver algebra is
// infinite-dimensional; carries the key of a witness cycle of
// ideal-avoiding words.
class InfiniteDimensional : public Error {
 public:
  InfiniteDimensional(const std::string& what, std::string witness_key)
      : Error(what), witness_key_(std::move(witness_key)) {}
  const std::string& witness_key() const { return witness_key_; }

 private:
  std::string witness_key_;
};

class NotComposable : public Error {
 public:
  using Error::Error;
};

class IncomparableVertices : public Error {
 public:
  using Error::Error;
};

class CyclicOrder : public Error {
 public:
  using Error::Error;
};

// DSL parsing.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, int line, int column)
      : Error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class UnknownVertex : public Error {
 public:
  using Error::Error;
};

class UnknownArrow : public Error {
 public:
  using Error::Error;
};

class NonComposableRelation : public Error {
 public:
  using Error::Error;
};

// Homological preconditions.
class NotQuasiHereditary : public Error {
 public:
  using Error::Error;
};

class HasRelations : public Error {
 public:
  using Error::Error;
};

class MissingSemisimplePart : public Error {
 public:
  using Error::Error;
};

class TooManyVertices : public Error {
 public:
  using Error::Error;
};

}  // namespace qhb
