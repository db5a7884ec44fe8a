#include "niven/solver.hpp"

#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "niven/digits.hpp"
#include "niven/error.hpp"
#include "niven/modarith.hpp"

namespace niven {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// Modular inverse for word-sized values with gcd(a, m) = 1.
std::uint64_t inverse_u64(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

void validate(std::uint32_t base, std::uint64_t modulus, std::uint64_t sigma) {
  if (base < kMinBase || base > kMaxBase) {
    throw invalid_argument_error("solver: base must be in [2, 65536]");
  }
  if (modulus == 0) throw invalid_argument_error("solver: modulus must be >= 1");
  if (sigma == 0) throw invalid_argument_error("solver: digit sum target must be >= 1");
}

}  // namespace

SolverResult min_multiple_with_digit_sum(std::uint32_t base, std::uint64_t modulus,
                                         std::uint64_t sigma,
                                         const SolverOptions& options) {
  validate(base, modulus, sigma);

  const std::uint64_t state_count = modulus * (sigma + 1);
  if (sigma + 1 == 0 || state_count / (sigma + 1) != modulus ||
      state_count > options.state_cap ||
      state_count > std::numeric_limits<std::uint32_t>::max()) {
    throw resource_limit_error("solver: state table of " +
                               std::to_string(modulus) + "*" +
                               std::to_string(sigma + 1) +
                               " states exceeds the configured cap");
  }

  const std::uint64_t q = base;
  const std::uint64_t m = modulus;
  auto index = [m](std::uint64_t r, std::uint64_t s) {
    return static_cast<std::uint32_t>(s * m + r);
  };

  // min_rem[state] = digits still needed to land exactly on (0, sigma).
  std::vector<std::uint32_t> min_rem(state_count, kUnreached);
  std::vector<std::uint32_t> queue;
  queue.reserve(state_count);

  min_rem[index(0, sigma)] = 0;
  queue.push_back(index(0, sigma));

  // Predecessors of (r', s') under digit d solve q*r == r' - d (mod m).
  const std::uint64_t g = std::gcd(q, m);
  const std::uint64_t m_red = m / g;
  const std::uint64_t q_inv = inverse_u64((q / g) % m_red, m_red);

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t cur = queue[head];
    const std::uint64_t r_to = cur % m;
    const std::uint64_t s_to = cur / m;
    const std::uint32_t next_dist = min_rem[cur] + 1;
    const std::uint64_t d_max = std::min<std::uint64_t>(q - 1, s_to);
    for (std::uint64_t d = 0; d <= d_max; ++d) {
      const std::uint64_t c = (r_to + m - d % m) % m;
      if (c % g != 0) continue;
      const std::uint64_t base_sol = mul_mod_u64(q_inv, c / g, m_red);
      const std::uint64_t s_from = s_to - d;
      for (std::uint64_t j = 0; j < g; ++j) {
        const std::uint64_t r_from = base_sol + j * m_red;
        const std::uint32_t state = index(r_from, s_from);
        if (min_rem[state] == kUnreached) {
          min_rem[state] = next_dist;
          queue.push_back(state);
        }
      }
    }
  }

  SolverResult result;
  result.base = base;
  result.modulus = modulus;
  result.digit_sum_target = sigma;

  // Choose the leading digit: smallest one reaching the goal fastest.
  std::uint32_t best = kUnreached;
  std::uint32_t first_digit = 0;
  for (std::uint64_t d = 1; d < q && d <= sigma; ++d) {
    const std::uint32_t dist = min_rem[index(d % m, d)];
    if (dist < best) {
      best = dist;
      first_digit = static_cast<std::uint32_t>(d);
    }
  }
  if (best == kUnreached) {
    result.found = false;
    return result;
  }

  DigitString digits;
  digits.base = base;
  digits.digits.push_back(first_digit);
  std::uint64_t r = first_digit % m;
  std::uint64_t s = first_digit;
  for (std::uint32_t rem = best; rem > 0; --rem) {
    bool advanced = false;
    for (std::uint64_t d = 0; d < q && s + d <= sigma; ++d) {
      const std::uint64_t r_next = (r * q + d) % m;
      if (min_rem[index(r_next, s + d)] == rem - 1) {
        digits.digits.push_back(static_cast<std::uint32_t>(d));
        r = r_next;
        s += d;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      throw verification_error("solver: reconstruction lost the shortest path");
    }
  }

  result.found = true;
  result.value = from_digits(digits);
  result.quotient = result.value / Natural(modulus);
  result.digit_count = digits.digits.size();

  if (options.self_check) {
    if (!(result.value % Natural(modulus)).is_zero() ||
        digit_sum(result.value, base) != Natural(sigma)) {
      throw verification_error("solver: result failed divisibility/digit-sum recheck");
    }
  }
  return result;
}

SolverResult minimal_niven(std::uint32_t base, std::uint64_t k,
                           const SolverOptions& options) {
  SolverResult result = min_multiple_with_digit_sum(base, k, k, options);
  if (!result.found) {
    throw verification_error("minimal Niven number must exist for every k, none found for k=" +
                             std::to_string(k));
  }
  return result;
}

std::optional<Natural> brute_force_min(std::uint32_t base, std::uint64_t modulus,
                                       std::uint64_t sigma, const Natural& limit) {
  validate(base, modulus, sigma);
  if (limit.bit_length() <= 63) {
    const std::uint64_t cap = limit.to_uint64();
    for (std::uint64_t v = modulus; v <= cap; v += modulus) {
      if (digit_sum_u64(v, base) == sigma) return Natural(v);
    }
    return std::nullopt;
  }
  for (Natural v = modulus; v <= limit; v += Natural(modulus)) {
    if (digit_sum(v, base) == Natural(sigma)) return v;
  }
  return std::nullopt;
}

}  // namespace niven
