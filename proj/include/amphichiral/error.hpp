#pragma once

#include <stdexcept>
#include <string>

namespace amphi {

// Failure classes surfaced through the C API as stable error codes.
enum class ErrorKind {
  InvalidArgument,
  Parse,
  Build,
  Precondition,
  OrbitOverflow,
  CapExceeded,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorKind::Parse,
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace amphi
