#pragma once

#include <stdexcept>
#include <string>

namespace frogsteg {

/// Base for every error the toolkit raises. Each kind maps to a stable
/// process exit code used by the command-line tool.
class Error : public std::runtime_error {
 public:
  Error(const std::string& what, int exitCode) : std::runtime_error(what), exitCode_(exitCode) {}
  int exitCode() const noexcept { return exitCode_; }

 private:
  int exitCode_;
};

/// Unreadable/unwritable files and undecodable images (exit 1).
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what, 1) {}
};

/// Bad arguments, dimension mismatches, capacity overruns (exit 2).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what, 2) {}
};

/// Header magic/version/CRC failures: wrong key or not a stego image (exit 3).
class IntegrityError : public Error {
 public:
  explicit IntegrityError(const std::string& what) : Error(what, 3) {}
};

}  // namespace frogsteg
