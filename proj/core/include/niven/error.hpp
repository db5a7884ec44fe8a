#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace niven {

// Base class for everything thrown by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad inputs: base out of [2, 2^16], digit out of range, even k where odd
// is required, and so on.
class invalid_argument_error : public error {
 public:
  using error::error;
};

// multiplicative_order was asked for a base that shares a factor with the
// modulus.
class not_coprime_error : public error {
 public:
  using error::error;
};

// A closed form was requested for a k outside the class it needs.  Carries
// the residue that could not be written in the required shape.
class not_in_class_error : public error {
 public:
  not_in_class_error(std::string msg, std::uint64_t k, std::uint64_t residue)
      : error(std::move(msg)), k(k), residue(residue) {}
  std::uint64_t k;
  std::uint64_t residue;
};

// A state table or DP table would exceed the configured cap.
class resource_limit_error : public error {
 public:
  using error::error;
};

// A construction produced a value that failed its own postcondition check.
// Always indicates a bug, never expected in normal operation.
class verification_error : public error {
 public:
  using error::error;
};

// A result cache file disagrees with recomputation or fails validation.
class cache_error : public error {
 public:
  using error::error;
};

}  // namespace niven
