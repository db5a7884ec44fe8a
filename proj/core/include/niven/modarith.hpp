#pragma once

#include <cstdint>

#include "niven/natural.hpp"

namespace niven {

// Multiplicative order of `base` modulo `modulus`: the least t >= 1 with
// base^t == 1 (mod modulus).  Defined only for coprime base and modulus.
struct OrderResult {
  std::uint64_t modulus = 0;
  std::uint64_t base = 0;
  std::uint64_t order = 0;
};

// k = q_part * coprime where every prime factor of q_part divides q,
// gcd(coprime, q) = 1, and exponent is the least n with q_part | q^n.
struct CoprimeSplit {
  std::uint64_t q_part = 1;
  std::uint64_t coprime = 1;
  std::uint32_t exponent = 0;
};

// b^e mod m on unbounded integers; m >= 1.
Natural mod_pow(const Natural& b, const Natural& e, const Natural& m);

// Brute-force scan; cheap for the modulus sizes this project works at.
// modulus = 1 returns order 1 by convention.
OrderResult multiplicative_order(std::uint64_t base, std::uint64_t modulus);

// Smallest n >= 1 with k <= 2^n; equals ceil(log2 k) for k >= 2 and is 1 at
// k = 1.
std::uint32_t ceil_log2(std::uint64_t k);

// Largest a with q^a | k; requires k >= 1.
std::uint32_t q_adic_valuation(std::uint64_t k, std::uint64_t q);

CoprimeSplit coprime_split(std::uint64_t k, std::uint64_t q);

// Word-sized modular helpers.
std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m);

// Deterministic trial-division test, intended for n < 2^32 (used to label
// Mersenne-prime cases).
bool is_prime_u64(std::uint64_t n);

}  // namespace niven
