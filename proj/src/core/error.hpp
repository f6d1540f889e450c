#pragma once

#include <stdexcept>
#include <string>

namespace tcorelab {

enum class ErrorCode {
  invalid_argument = 1,
  bound_exceeded,
  not_addable,
  not_a_core,
  wrong_residue,
  invalid_vector,
  not_type_a,
  repeated_even_part,
  non_invertible,
  unknown_id,
  overflow,
  internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &what) { throw Error(code, what); }

// Overflow-checked accumulation for tallies that must stay exact.
inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    fail(ErrorCode::overflow, "64-bit counter overflow");
  return r;
}

/// Mathematical (nonnegative) residue of a mod m, m > 0.
inline long long mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

/// Floor division for m > 0.
inline long long floor_div(long long a, long long m) {
  long long q = a / m;
  return (a % m != 0 && a < 0) ? q - 1 : q;
}

} // namespace tcorelab
