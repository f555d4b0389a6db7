#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lindim {

// Every failure carries a stable machine-readable code ("NotPrime",
// "DimensionMismatch", ...) plus a human-readable message.  The CLI maps
// codes to exit statuses; tests match on codes, never on message text.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace lindim
