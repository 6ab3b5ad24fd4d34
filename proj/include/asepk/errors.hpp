#pragma once

#include <stdexcept>
#include <string>

namespace asepk {

enum class ErrorKind {
  Structural,      // mismatched variable lists, dimensions, lengths
  Pole,            // division by zero at an evaluation point
  LimitUndefined,  // genuine pole remains at q = 1
  Degenerate,      // eigenvalue collision at the chosen parameters
  Internal,        // consistency assertion failed (a bug)
  Usage,           // bad input from the caller
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace asepk
