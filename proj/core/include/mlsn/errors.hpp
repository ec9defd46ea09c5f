#pragma once

#include <stdexcept>
#include <string>

namespace mlsn {

// Bad user input: config files, CLI values, malformed tables.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Request outside the defined domain of an operation (e.g. time outside
// an ephemeris table, destination index out of range).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Frame error control mismatch on decode.
class ChecksumError : public std::runtime_error {
 public:
  explicit ChecksumError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally invalid serialized data (hex dumps, frame fields).
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mlsn
