#include "niven/modarith.hpp"

#include <numeric>
#include <string>

#include "niven/error.hpp"

namespace niven {

Natural mod_pow(const Natural& b, const Natural& e, const Natural& m) {
  if (m.is_zero()) {
    throw invalid_argument_error("mod_pow: modulus must be >= 1");
  }
  return Natural(Natural::backend(
      boost::multiprecision::powm(b.value(), e.value(), m.value())));
}

std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  if (m == 0) throw invalid_argument_error("pow_mod_u64: modulus must be >= 1");
  if (m == 1) return 0;
  std::uint64_t result = 1;
  b %= m;
  while (e != 0) {
    if (e & 1) result = mul_mod_u64(result, b, m);
    e >>= 1;
    if (e != 0) b = mul_mod_u64(b, b, m);
  }
  return result;
}

OrderResult multiplicative_order(std::uint64_t base, std::uint64_t modulus) {
  if (modulus == 0) {
    throw invalid_argument_error("multiplicative_order: modulus must be >= 1");
  }
  if (modulus == 1) return {1, base, 1};
  if (std::gcd(base % modulus, modulus) != 1) {
    throw not_coprime_error("multiplicative_order: gcd(" + std::to_string(base) +
                            ", " + std::to_string(modulus) + ") > 1");
  }
  std::uint64_t cur = base % modulus;
  std::uint64_t t = 1;
  while (cur != 1) {
    cur = mul_mod_u64(cur, base % modulus, modulus);
    ++t;
  }
  return {modulus, base, t};
}

std::uint32_t ceil_log2(std::uint64_t k) {
  if (k == 0) throw invalid_argument_error("ceil_log2: argument must be >= 1");
  if (k == 1) return 1;
  // Smallest n with k <= 2^n, i.e. the bit length of k-1.
  std::uint32_t n = 0;
  for (std::uint64_t v = k - 1; v != 0; v >>= 1) ++n;
  return n;
}

std::uint32_t q_adic_valuation(std::uint64_t k, std::uint64_t q) {
  if (k == 0) throw invalid_argument_error("q_adic_valuation: k must be >= 1");
  if (q < 2) throw invalid_argument_error("q_adic_valuation: base must be >= 2");
  std::uint32_t a = 0;
  while (k % q == 0) {
    k /= q;
    ++a;
  }
  return a;
}

CoprimeSplit coprime_split(std::uint64_t k, std::uint64_t q) {
  if (k == 0) throw invalid_argument_error("coprime_split: k must be >= 1");
  if (q < 2) throw invalid_argument_error("coprime_split: base must be >= 2");
  // Strip from k every prime it shares with q; what remains is the coprime
  // part, the stripped product divides a power of q.
  std::uint64_t coprime = k;
  for (std::uint64_t g = std::gcd(coprime, q); g > 1; g = std::gcd(coprime, q)) {
    while (coprime % g == 0) coprime /= g;
  }
  const std::uint64_t q_part = k / coprime;
  std::uint32_t exponent = 0;
  if (q_part > 1) {
    std::uint64_t residue = 1 % q_part;
    while (residue != 0) {
      residue = mul_mod_u64(residue, q % q_part, q_part);
      ++exponent;
    }
  }
  return {q_part, coprime, exponent};
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

}  // namespace niven
