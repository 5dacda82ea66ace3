// Error taxonomy shared by the core library, the C API, and the CLI.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gb {

// Three failure classes, mirrored by CLI exit codes:
//   Parse  (1) - malformed input text,
//   Domain (2) - structurally valid input that violates an operation's preconditions,
//   Verify (3) - a replay or certification check did not reproduce the claimed result.
enum class ErrorKind { Parse = 1, Domain = 2, Verify = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_parse(const std::string& msg) { throw Error(ErrorKind::Parse, msg); }
[[noreturn]] inline void fail_domain(const std::string& msg) { throw Error(ErrorKind::Domain, msg); }
[[noreturn]] inline void fail_verify(const std::string& msg) { throw Error(ErrorKind::Verify, msg); }

}  // namespace gb
