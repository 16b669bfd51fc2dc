#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace wmi {

// Dense element id in [0, ground_size).
using Element = std::int32_t;

// Exact integer used for every weight, split, epsilon and distance label.
using Integer = __int128;

inline constexpr Integer kIntegerMax = std::numeric_limits<__int128>::max();

// Raised when an exact-integer operation would leave the 128-bit range.
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A proven invariant of the algorithm failed at runtime.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed instance: bad ids, inconsistent descriptors, bad JSON shape.
class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Integer checked_add(Integer a, Integer b) {
  Integer out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

inline Integer checked_sub(Integer a, Integer b) {
  Integer out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
  return out;
}

inline Integer checked_mul(Integer a, Integer b) {
  Integer out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

std::string to_string(Integer value);

// Narrowing used at I/O boundaries; throws OverflowError if out of range.
std::int64_t to_int64(Integer value);

}  // namespace wmi
