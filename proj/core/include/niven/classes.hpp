#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "niven/constructions.hpp"

namespace niven {

// Class C_m holds the odd k >= 3 for which 2^(k+m) - 1 is congruent mod k
// to a sum of m distinct powers of two with exponents in [0, m+k-2].  The
// classes are nested upward in m and every odd k lands in C_(ceil_log2 k)
// at the latest, so the minimal class index always exists.

struct ClassOptions {
  std::uint64_t cell_budget = std::uint64_t{1} << 31;  // DP cells per query
};

struct ClassRecord {
  std::uint64_t k = 0;
  std::uint32_t m_min = 0;
  std::uint64_t memberships = 0;  // bit m-1 set iff tested and k in C_m
  std::optional<ExponentSet> witness;
};

struct DensityPoint {
  std::uint64_t x = 0;
  std::uint64_t count = 0;  // odd members k with 3 <= k <= x
  double ratio = 0.0;       // 2 * count / x
};

// Definition-faithful take/skip DP over the exponent window; the witness
// is returned when k is a member.
std::optional<ExponentSet> class_witness(std::uint64_t k, std::uint32_t m,
                                         const ClassOptions& options = {});
bool is_in_class(std::uint64_t k, std::uint32_t m, const ClassOptions& options = {});

// O(order) membership tests built on the power-residue table of 2 mod k.
// Equivalent to the DP at m = 1 and m = 2.
bool fast_c1(std::uint64_t k);
bool fast_c2(std::uint64_t k);

// Smallest m with k in C_m, probing m = 1, 2 with the fast tests and the
// DP beyond.
ClassRecord min_class_index(std::uint64_t k, const ClassOptions& options = {});

// Membership counts over odd 3 <= k <= x_max with the normalization
// 2*count/x; points are emitted every `stride`-th odd x.
std::vector<DensityPoint> density_scan(std::uint64_t x_max, std::uint32_t m,
                                       std::uint64_t stride = 1,
                                       unsigned threads = 1,
                                       const ClassOptions& options = {});

}  // namespace niven
