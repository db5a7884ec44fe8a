#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "niven/natural.hpp"

namespace niven {

// Strictly increasing exponents {j_1 < ... < j_r} with
// sum of 2^{j_i} == residue (mod modulus), all within [0, max_exponent].
struct ExponentSet {
  std::uint64_t modulus = 1;
  std::uint64_t residue = 0;
  std::vector<std::uint64_t> exponents;
  std::uint64_t max_exponent = 0;
};

// Throws verification_error unless the set is sorted, duplicate-free,
// within its window and congruent to its residue.
void require_valid(const ExponentSet& set);

// Exact subset search: `count` distinct exponents in [0, max_exponent]
// whose powers of two sum to `target` mod k.  Take/skip DP over the window
// with one bitset of residues per (position, chosen) cell; nullopt when no
// subset exists.  Table cells are capped by `cell_budget`.
std::optional<std::vector<std::uint64_t>> exponent_subset_dp(
    std::uint64_t k, std::uint64_t target, std::uint32_t count,
    std::uint64_t max_exponent, std::uint64_t cell_budget = std::uint64_t{1} << 31);

// A constructed number together with the checks that back its claims.
// Constructions refuse to return reports with any applicable flag false.
struct WitnessReport {
  std::string construction;
  std::string parameters;
  Natural value;
  bool divisibility_ok = false;
  bool digit_sum_ok = false;
  bool bound_ok = false;
  std::string notes;
};

// Multiple of k with base-q digit sum exactly k, built from a geometric
// series of q^(order) blocks; the non-coprime case splits k and spreads
// shifted copies so digits never collide.
WitnessReport euler_construction(std::uint32_t base, std::uint64_t k);

enum class RepresentationEngine {
  constructive,  // gap-filling rewrite of the binary expansion
  dp_search,     // exact subset DP over the exponent window
};

// For odd k >= 3 writes any residue x as a sum, mod k, of exactly
// ceil_log2(k) distinct powers of two with exponents below
// ceil_log2(k) + k - 1.  Both engines satisfy the same contract; the
// representation itself is not unique.
ExponentSet distinct_power_representation(
    std::uint64_t k, std::uint64_t x,
    RepresentationEngine engine = RepresentationEngine::constructive);

// A multiplier n with binary digit sum of n*k equal to ell*k and
// n*k <= 2^(ell*k + n_k) - 2^(v2(k)).  Powers of two take the all-ones
// block, even k reduce to their odd part, odd k subtract a distinct-power
// representation from an all-ones number.
WitnessReport bounded_digit_sum_multiple(std::uint64_t k, std::uint64_t ell);

// Closed form for odd k whose minimal Niven number has binary length k+1:
// a_k = 2^(k+1) - 1 - 2^(j1).
struct C1ClosedForm {
  std::uint64_t k = 0;
  std::uint64_t order = 0;  // multiplicative order of 2 mod k
  std::uint64_t j0 = 0;     // 2^j0 == 2^(k+1) - 1 (mod k), j0 < order
  std::uint64_t shift = 0;  // s with j1 = j0 + s * order <= k - 1
  std::uint64_t j1 = 0;
  Natural value;
};

// Throws not_in_class_error when 2^(k+1)-1 is not a power of 2 mod k.
C1ClosedForm c1_closed_form(std::uint64_t k);

// For k = 2^i - 1: the value 2^(k + k_minus) + 2^k - 2^(k-i) - 1, a
// multiple of k with binary digit sum k.  Equals the minimal Niven number
// when k is prime (is_tight), otherwise only an upper bound.
struct MersenneWitness {
  std::uint64_t i = 0;
  std::uint64_t k = 0;        // 2^i - 1
  std::uint64_t k_minus = 0;  // least positive residue of -k mod i
  Natural value;
  bool is_tight = false;
};

MersenneWitness mersenne_value(std::uint64_t i);

// Exact minimal Niven number for k = q^m: q^m * (2*q^((q^m-1)/(q-1)) - 1)
// for q > 2 and 2^m * (2^(2^m) - 1) for q = 2.
WitnessReport prime_power_formula(std::uint32_t base, std::uint32_t m);

}  // namespace niven
