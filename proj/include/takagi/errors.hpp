#pragma once

#include <stdexcept>
#include <string>

namespace takagi {

// Process exit codes used by the CLI. Library errors carry one of these so
// the front end can map failures without string matching.
enum class ExitCode : int {
  ok = 0,
  verification_failed = 1,
  usage = 2,
  domain = 3,
  eta_infinite = 4,
  resource = 5,
  parse = 6,
  insufficient_data = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ExitCode code() const { return code_; }

 private:
  ExitCode code_;
};

struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ExitCode::domain, w) {}
};

// Raised when an operation needs a finite eta certificate and the sequence
// does not provide one (e.g. geometric ratio with a*b > 1).
struct EtaInfiniteError : Error {
  explicit EtaInfiniteError(const std::string& w)
      : Error(ExitCode::eta_infinite, w) {}
};

struct ResourceError : Error {
  explicit ResourceError(const std::string& w) : Error(ExitCode::resource, w) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ExitCode::parse, w) {}
};

struct InsufficientDataError : Error {
  explicit InsufficientDataError(const std::string& w)
      : Error(ExitCode::insufficient_data, w) {}
};

}  // namespace takagi
