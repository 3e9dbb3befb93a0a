#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ringlab {

enum class ErrorKind {
  descriptor,      // malformed or invalid ring descriptor
  encoding,        // element outside the ring or not in canonical form
  size_cap,        // finite ring or ideal enumeration beyond configured cap
  unsupported,     // operation not available for this ring family
  precondition,    // caller violated a documented precondition
  no_decomposition,
  no_lift,
  arity,
  overflow,
  input            // malformed JSON or CLI input
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ringlab
