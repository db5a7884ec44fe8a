#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace niven {

// Unbounded nonnegative integer.  A thin wrapper over an exact bignum that
// keeps the value canonical and nonnegative: subtraction that would go
// negative throws instead of wrapping or signing.
class Natural {
 public:
  using backend = boost::multiprecision::cpp_int;

  Natural() = default;
  Natural(std::uint64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Natural(backend v);

  // Parses decimal, or hexadecimal with a "0x" prefix.
  static Natural from_string(std::string_view text);

  const backend& value() const { return v_; }

  bool is_zero() const { return v_.is_zero(); }
  // Number of base-2 digits; 0 for the value 0.
  std::uint64_t bit_length() const;
  bool bit(std::uint64_t i) const;
  // Throws if the value does not fit in 64 bits.
  std::uint64_t to_uint64() const;

  std::string to_decimal() const;
  std::string to_hex() const;  // lowercase, no prefix

  // Natural logarithm at double precision, computed from the top bits and
  // the bit length so values far beyond double range stay finite.
  // Requires a positive value.
  double approx_ln() const;

  static Natural pow2(std::uint64_t exponent);
  static Natural pow(const Natural& base, std::uint64_t exponent);

  friend Natural operator+(const Natural& a, const Natural& b) {
    return Natural(backend(a.v_ + b.v_));
  }
  friend Natural operator-(const Natural& a, const Natural& b);
  friend Natural operator*(const Natural& a, const Natural& b) {
    return Natural(backend(a.v_ * b.v_));
  }
  friend Natural operator/(const Natural& a, const Natural& b);
  friend Natural operator%(const Natural& a, const Natural& b);
  friend std::pair<Natural, Natural> divmod(const Natural& a, const Natural& b);

  Natural& operator+=(const Natural& b) {
    v_ += b.v_;
    return *this;
  }
  Natural& operator*=(const Natural& b) {
    v_ *= b.v_;
    return *this;
  }

  friend bool operator==(const Natural& a, const Natural& b) = default;
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  template <typename Stream>
  friend Stream& operator<<(Stream& os, const Natural& n) {
    os << n.to_decimal();
    return os;
  }

 private:
  backend v_;
};

Natural gcd(const Natural& a, const Natural& b);

}  // namespace niven
