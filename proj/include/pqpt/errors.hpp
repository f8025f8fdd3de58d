#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pqpt {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A malformed input document; position is a byte offset into the document.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A structurally valid document violating the schema; field names the culprit.
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& field)
      : Error("schema violation at field: " + field), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class DuplicateIdError : public Error {
 public:
  explicit DuplicateIdError(const std::string& id)
      : Error("duplicate finding id: " + id), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

class UnsupportedMethodologyError : public Error {
 public:
  using Error::Error;
};

class NonMonotoneTimestampError : public Error {
 public:
  using Error::Error;
};

class UnregisteredParamsError : public Error {
 public:
  using Error::Error;
};

class MessageLengthMismatchError : public Error {
 public:
  using Error::Error;
};

class ParamMismatchError : public Error {
 public:
  using Error::Error;
};

class MalformedBlobError : public Error {
 public:
  using Error::Error;
};

class NoSuchCategoryInSetError : public Error {
 public:
  using Error::Error;
};

class EmptySetError : public Error {
 public:
  using Error::Error;
};

class IllegalEventError : public Error {
 public:
  using Error::Error;
};

class LedgerCorruptError : public Error {
 public:
  using Error::Error;
};

class ConfigInvalidError : public Error {
 public:
  using Error::Error;
};

// Precondition violations on direct API use (invalid profile, zero trials, ...).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace pqpt
