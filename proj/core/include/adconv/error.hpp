#pragma once

#include <stdexcept>
#include <string>

namespace adconv {

// Contract violations (shape mismatches, bad arguments, corrupt files) throw
// Error. Nothing in the library recovers from one; callers decide.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline void check(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

std::string strprintf(const char* fmt, ...) __attribute__((format(printf, 1, 2)));

}  // namespace adconv
