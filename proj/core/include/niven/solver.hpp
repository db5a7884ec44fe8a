#pragma once

#include <cstdint>
#include <optional>

#include "niven/natural.hpp"

namespace niven {

struct SolverOptions {
  // Maximum number of (residue, digit-sum) states; modulus * (sigma + 1)
  // beyond this raises resource_limit_error.
  std::uint64_t state_cap = std::uint64_t{1} << 28;
  // Recheck divisibility and digit sum on every returned value.
  bool self_check = true;
};

struct SolverResult {
  std::uint32_t base = 0;
  std::uint64_t modulus = 0;
  std::uint64_t digit_sum_target = 0;
  bool found = false;
  Natural value;     // minimal solution, 0 when not found
  Natural quotient;  // value / modulus
  std::uint64_t digit_count = 0;
};

// Smallest positive n divisible by `modulus` whose base-q digit sum equals
// `sigma`, or found=false when no such n exists (e.g. no power of 2 is a
// multiple of 3).
//
// States are (value mod modulus, digit sum so far); appending digit d maps
// (r, s) to ((r*q + d) mod modulus, s + d).  A reverse BFS from the goal
// state (0, sigma) fills minRem, the number of digits still needed from
// each state.  The answer has length 1 + min over first digits d >= 1 of
// minRem, and the digit string is rebuilt greedily: at every position take
// the smallest digit whose successor state needs exactly one digit fewer.
// Shortest length plus lexicographic minimality is numeric minimality.
SolverResult min_multiple_with_digit_sum(std::uint32_t base, std::uint64_t modulus,
                                         std::uint64_t sigma,
                                         const SolverOptions& options = {});

// The minimal Niven number for k: smallest positive multiple of k whose
// base-q digit sum is k.  quotient carries the companion value a_k / k.
SolverResult minimal_niven(std::uint32_t base, std::uint64_t k,
                           const SolverOptions& options = {});

// Linear scan over multiples of `modulus` up to `limit`, the independent
// oracle the solver is tested against.
std::optional<Natural> brute_force_min(std::uint32_t base, std::uint64_t modulus,
                                       std::uint64_t sigma, const Natural& limit);

}  // namespace niven
