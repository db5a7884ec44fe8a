#include "niven/classes.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "niven/error.hpp"
#include "niven/modarith.hpp"
#include "niven/parallel.hpp"

namespace niven {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

void check_odd(std::uint64_t k, const char* who) {
  if (k < 3 || k % 2 == 0) {
    throw invalid_argument_error(std::string(who) +
                                 ": k must be odd and >= 3, got " +
                                 std::to_string(k));
  }
}

std::uint64_t class_target(std::uint64_t k, std::uint32_t m) {
  return (pow_mod_u64(2, k + m, k) + k - 1) % k;
}

// Reusable tables for the powers of 2 mod k: pow[j] for j below the order,
// and residue -> smallest exponent, epoch-stamped so reuse across many k
// needs no clearing.
struct PowScratch {
  std::vector<std::uint32_t> stamp;
  std::vector<std::uint32_t> exp_at;
  std::vector<std::uint64_t> pow;
  std::uint32_t epoch = 0;

  // Walks the cycle of 2 mod k and returns the multiplicative order.
  std::uint64_t walk(std::uint64_t k) {
    if (stamp.size() < k) {
      stamp.resize(k, 0);
      exp_at.resize(k, 0);
    }
    if (++epoch == 0) {
      std::fill(stamp.begin(), stamp.end(), 0);
      epoch = 1;
    }
    pow.clear();
    std::uint64_t cur = 1 % k;
    for (std::uint64_t j = 0;; ++j) {
      if (j > 0 && cur == 1) return j;
      pow.push_back(cur);
      if (stamp[cur] != epoch) {
        stamp[cur] = epoch;
        exp_at[cur] = static_cast<std::uint32_t>(j);
      }
      cur = mul_mod_u64(cur, 2, k);
    }
  }

  std::optional<std::uint32_t> lookup(std::uint64_t residue) const {
    if (stamp[residue] != epoch) return std::nullopt;
    return exp_at[residue];
  }
};

std::optional<std::vector<std::uint64_t>> fast_c1_witness(std::uint64_t k,
                                                          PowScratch& scratch) {
  scratch.walk(k);
  const auto j0 = scratch.lookup(class_target(k, 1));
  if (!j0) return std::nullopt;
  return std::vector<std::uint64_t>{*j0};
}

std::optional<std::vector<std::uint64_t>> fast_c2_witness(std::uint64_t k,
                                                          PowScratch& scratch) {
  const std::uint64_t t = scratch.walk(k);
  const std::uint64_t target = class_target(k, 2);
  for (std::uint64_t a = 0; a < t; ++a) {
    const std::uint64_t need = (target + k - scratch.pow[a]) % k;
    const auto b = scratch.lookup(need);
    if (!b) continue;
    if (*b != a) {
      return std::vector<std::uint64_t>{std::min<std::uint64_t>(a, *b),
                                        std::max<std::uint64_t>(a, *b)};
    }
    // Same exponent twice only works as (a, a + order), which must still
    // fit the window [0, k].
    if (a + t <= k) return std::vector<std::uint64_t>{a, a + t};
  }
  return std::nullopt;
}

}  // namespace

std::optional<ExponentSet> class_witness(std::uint64_t k, std::uint32_t m,
                                         const ClassOptions& options) {
  check_odd(k, "class_witness");
  if (m == 0) throw invalid_argument_error("class_witness: m must be >= 1");
  auto exps = exponent_subset_dp(k, class_target(k, m), m, m + k - 2,
                                 options.cell_budget);
  if (!exps) return std::nullopt;
  ExponentSet set;
  set.modulus = k;
  set.residue = class_target(k, m);
  set.max_exponent = m + k - 2;
  set.exponents = std::move(*exps);
  require_valid(set);
  return set;
}

bool is_in_class(std::uint64_t k, std::uint32_t m, const ClassOptions& options) {
  return class_witness(k, m, options).has_value();
}

bool fast_c1(std::uint64_t k) {
  check_odd(k, "fast_c1");
  PowScratch scratch;
  return fast_c1_witness(k, scratch).has_value();
}

bool fast_c2(std::uint64_t k) {
  check_odd(k, "fast_c2");
  PowScratch scratch;
  return fast_c2_witness(k, scratch).has_value();
}

ClassRecord min_class_index(std::uint64_t k, const ClassOptions& options) {
  check_odd(k, "min_class_index");
  ClassRecord record;
  record.k = k;

  PowScratch scratch;
  auto finish = [&](std::uint32_t m, std::vector<std::uint64_t> exps) {
    record.m_min = m;
    record.memberships |= std::uint64_t{1} << (m - 1);
    ExponentSet set;
    set.modulus = k;
    set.residue = class_target(k, m);
    set.max_exponent = m + k - 2;
    set.exponents = std::move(exps);
    require_valid(set);
    record.witness = std::move(set);
  };

  if (auto w = fast_c1_witness(k, scratch)) {
    finish(1, std::move(*w));
    return record;
  }
  if (auto w = fast_c2_witness(k, scratch)) {
    finish(2, std::move(*w));
    return record;
  }
  const std::uint32_t upper = ceil_log2(k);
  for (std::uint32_t m = 3; m <= upper; ++m) {
    if (auto set = class_witness(k, m, options)) {
      record.m_min = m;
      record.memberships |= std::uint64_t{1} << (m - 1);
      record.witness = std::move(set);
      return record;
    }
  }
  throw verification_error("min_class_index: no class found up to ceil_log2(k) "
                           "for k=" + std::to_string(k));
}

std::vector<DensityPoint> density_scan(std::uint64_t x_max, std::uint32_t m,
                                       std::uint64_t stride, unsigned threads,
                                       const ClassOptions& options) {
  if (m == 0) throw invalid_argument_error("density_scan: m must be >= 1");
  if (stride == 0) throw invalid_argument_error("density_scan: stride must be >= 1");

  std::vector<DensityPoint> points;
  if (x_max < 3) return points;

  const std::uint64_t n = (x_max - 3) / 2 + 1;  // odd k in [3, x_max]
  std::vector<std::uint8_t> member(n, 0);

  parallel_strided(
      n, threads, [] { return PowScratch{}; },
      [&](PowScratch& scratch, std::uint64_t i) {
        const std::uint64_t k = 3 + 2 * i;
        bool in;
        if (m == 1) {
          in = fast_c1_witness(k, scratch).has_value();
        } else if (m == 2) {
          in = fast_c2_witness(k, scratch).has_value();
        } else {
          in = is_in_class(k, m, options);
        }
        member[i] = in ? 1 : 0;
      });

  points.reserve(n / stride + 1);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    count += member[i];
    if (i % stride == 0) {
      const std::uint64_t x = 3 + 2 * i;
      points.push_back({x, count, 2.0 * static_cast<double>(count) /
                                      static_cast<double>(x)});
    }
  }
  return points;
}

}  // namespace niven
