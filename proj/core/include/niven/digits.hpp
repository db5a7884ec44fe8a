#pragma once

#include <cstdint>
#include <vector>

#include "niven/natural.hpp"

namespace niven {

// Bases are capped so a digit alphabet always fits comfortably in 32 bits.
inline constexpr std::uint32_t kMinBase = 2;
inline constexpr std::uint32_t kMaxBase = 1u << 16;

// Positional representation, most-significant digit first.  The value zero
// is the single digit [0]; anything else has no leading zero.
struct DigitString {
  std::uint32_t base = 10;
  std::vector<std::uint32_t> digits;
};

// Sum of the base-q digits of n.
Natural digit_sum(const Natural& n, std::uint32_t base);

DigitString to_digits(const Natural& n, std::uint32_t base);
Natural from_digits(const DigitString& d);

// Fast path for machine-word values, used in hot loops and brute-force
// scans.
std::uint64_t digit_sum_u64(std::uint64_t n, std::uint32_t base);

}  // namespace niven
