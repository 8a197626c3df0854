#pragma once

#include <stdexcept>
#include <string>

namespace cover {

enum class ErrorKind {
  MalformedInput,  // bad data: non-bijections, parse failures, degree mismatches
  Domain,          // violated mathematical precondition
  Resource,        // an enumeration or size budget was exceeded
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  static Error malformed(const std::string& message) {
    return Error(ErrorKind::MalformedInput, message);
  }
  static Error domain(const std::string& message) {
    return Error(ErrorKind::Domain, message);
  }
  static Error resource(const std::string& message) {
    return Error(ErrorKind::Resource, message);
  }

 private:
  ErrorKind kind_;
};

}  // namespace cover
