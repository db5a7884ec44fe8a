#include <doctest.h>

#include <random>
#include <vector>

#include "niven/digits.hpp"
#include "niven/error.hpp"

using niven::DigitString;
using niven::Natural;

namespace {

// Independent digit sum used as the oracle for the library implementation.
std::uint64_t oracle_digit_sum(std::uint64_t n, std::uint64_t base) {
  std::uint64_t s = 0;
  for (; n != 0; n /= base) s += n % base;
  return s;
}

Natural random_bits(std::mt19937_64& rng, unsigned bits) {
  Natural v = 0;
  for (unsigned i = 0; i < bits; i += 32) {
    v = v * Natural(std::uint64_t{1} << 32) + Natural(rng() & 0xffffffffu);
  }
  return v;
}

}  // namespace

TEST_CASE("digit sum examples") {
  CHECK(digit_sum(Natural(2007), 10) == Natural(9));
  CHECK(digit_sum(Natural(0), 2) == Natural(0));
  CHECK(digit_sum(Natural(0), 10) == Natural(0));
  CHECK(digit_sum(Natural(0), 65536) == Natural(0));
  CHECK(digit_sum(Natural(623), 2) == Natural(oracle_digit_sum(623, 2)));
  CHECK(digit_sum(Natural(623), 2) == Natural(7));
}

TEST_CASE("digit sum rejects bad bases") {
  CHECK_THROWS_AS(digit_sum(Natural(5), 1), niven::invalid_argument_error);
  CHECK_THROWS_AS(digit_sum(Natural(5), 0), niven::invalid_argument_error);
  CHECK_THROWS_AS(digit_sum(Natural(5), 65537), niven::invalid_argument_error);
}

TEST_CASE("encoding examples") {
  CHECK(to_digits(Natural(48), 10).digits == std::vector<std::uint32_t>{4, 8});
  CHECK(to_digits(Natural(0), 2).digits == std::vector<std::uint32_t>{0});
  CHECK(niven::from_digits({3, {1, 2, 0}}) == Natural(15));
  CHECK_THROWS_AS(niven::from_digits({3, {1, 3}}), niven::invalid_argument_error);
  CHECK_THROWS_AS(niven::from_digits({10, {}}), niven::invalid_argument_error);
}

TEST_CASE("no leading zeros and canonical zero") {
  for (std::uint64_t n : {1ull, 9ull, 10ull, 4096ull, 99999ull}) {
    const DigitString d = to_digits(Natural(n), 10);
    CHECK(d.digits.front() != 0);
  }
  CHECK(to_digits(Natural(0), 7).digits == std::vector<std::uint32_t>{0});
}

TEST_CASE("round trip, exhaustive below 10^5") {
  for (const std::uint32_t base : {2u, 3u, 10u, 16u}) {
    for (std::uint64_t n = 0; n < 100000; ++n) {
      const Natural v(n);
      CHECK(from_digits(to_digits(v, base)) == v);
    }
  }
}

TEST_CASE("round trip, 1000-bit values") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::uint32_t> base_dist(2, 65536);
  for (int trial = 0; trial < 60; ++trial) {
    const Natural v = random_bits(rng, 1000);
    const std::uint32_t base = base_dist(rng);
    CHECK(from_digits(to_digits(v, base)) == v);
  }
}

TEST_CASE("digit sum congruence mod base-1") {
  // n and its digit sum agree modulo q-1.
  for (const std::uint32_t base : {2u, 3u, 10u, 16u}) {
    for (std::uint64_t n = 0; n < 100000; ++n) {
      const std::uint64_t s = niven::digit_sum_u64(n, base);
      CHECK(n % (base - 1) == s % (base - 1));
    }
  }
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const Natural v = random_bits(rng, 800);
    for (const std::uint32_t base : {2u, 3u, 10u, 16u}) {
      const Natural q1(base - 1);
      CHECK(v % q1 == digit_sum(v, base) % q1);
    }
  }
}

TEST_CASE("binary digit sum is subadditive") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Natural a = random_bits(rng, 200);
    const Natural b = random_bits(rng, 200);
    CHECK(digit_sum(a + b, 2) <= digit_sum(a, 2) + digit_sum(b, 2));
  }
}

TEST_CASE("digit sum agrees with the oracle on random words") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::uint64_t n = rng() >> (trial % 32);
    for (const std::uint32_t base : {2u, 3u, 10u, 16u, 255u}) {
      CHECK(digit_sum(Natural(n), base) == Natural(oracle_digit_sum(n, base)));
    }
  }
}
