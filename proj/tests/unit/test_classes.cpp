#include <doctest.h>

#include <vector>

#include "niven/classes.hpp"
#include "niven/error.hpp"
#include "niven/modarith.hpp"
#include "niven/solver.hpp"

using niven::ExponentSet;
using niven::Natural;

TEST_CASE("membership worked examples") {
  CHECK(niven::is_in_class(5, 1));
  CHECK_FALSE(niven::is_in_class(3, 1));
  CHECK(niven::is_in_class(3, 2));
  CHECK_FALSE(niven::is_in_class(7, 2));
  CHECK(niven::is_in_class(7, 3));
  CHECK(niven::is_in_class(11, 1));
  CHECK_FALSE(niven::is_in_class(15, 1));
  CHECK_THROWS_AS(niven::is_in_class(4, 1), niven::invalid_argument_error);
  CHECK_THROWS_AS(niven::is_in_class(1, 1), niven::invalid_argument_error);
  CHECK_THROWS_AS(niven::is_in_class(5, 0), niven::invalid_argument_error);
}

TEST_CASE("fast tests worked examples") {
  CHECK(niven::fast_c1(13));
  CHECK_FALSE(niven::fast_c1(9));
  CHECK(niven::fast_c2(3));
  CHECK_THROWS_AS(niven::fast_c1(8), niven::invalid_argument_error);
  CHECK_THROWS_AS(niven::fast_c2(8), niven::invalid_argument_error);
}

TEST_CASE("fast tests agree with the DP") {
  for (std::uint64_t k = 3; k <= 201; k += 2) {
    CHECK(niven::fast_c1(k) == niven::is_in_class(k, 1));
    CHECK(niven::fast_c2(k) == niven::is_in_class(k, 2));
  }
}

TEST_CASE("class witnesses are valid and sized m") {
  for (std::uint64_t k = 3; k <= 101; k += 2) {
    const std::uint32_t upper = niven::ceil_log2(k);
    for (std::uint32_t m = 1; m <= upper; ++m) {
      const auto witness = niven::class_witness(k, m);
      if (!witness) continue;
      CHECK(witness->exponents.size() == m);
      CHECK(witness->max_exponent == m + k - 2);
      CHECK_NOTHROW(niven::require_valid(*witness));
    }
  }
}

TEST_CASE("classes are nested upward in m") {
  for (std::uint64_t k = 3; k <= 501; k += 2) {
    const std::uint32_t upper = niven::ceil_log2(k);
    bool seen = false;
    for (std::uint32_t m = 1; m <= upper; ++m) {
      const bool in = niven::is_in_class(k, m);
      if (seen) CHECK(in);
      seen = seen || in;

      // doubling a witness and attaching exponent 0 lands one class higher
      if (in) {
        const auto witness = niven::class_witness(k, m);
        REQUIRE(witness.has_value());
        ExponentSet shifted;
        shifted.modulus = k;
        shifted.residue = (niven::pow_mod_u64(2, k + m + 1, k) + k - 1) % k;
        shifted.max_exponent = (m + 1) + k - 2;
        shifted.exponents.push_back(0);
        for (const std::uint64_t j : witness->exponents) {
          shifted.exponents.push_back(j + 1);
        }
        CHECK_NOTHROW(niven::require_valid(shifted));
      }
    }
    CHECK(seen);  // membership is guaranteed by m = ceil_log2(k)
  }
}

TEST_CASE("minimal class index") {
  CHECK(niven::min_class_index(5).m_min == 1);
  CHECK(niven::min_class_index(3).m_min == 2);
  CHECK(niven::min_class_index(7).m_min == 3);
  const auto record = niven::min_class_index(11);
  CHECK(record.m_min == 1);
  REQUIRE(record.witness.has_value());
  CHECK_NOTHROW(niven::require_valid(*record.witness));
  CHECK(record.memberships == 0b1);
}

TEST_CASE("Mersenne numbers land exactly at their exponent") {
  for (const std::uint64_t i : {2ull, 3ull, 5ull, 7ull}) {
    const std::uint64_t k = (std::uint64_t{1} << i) - 1;
    CHECK(niven::min_class_index(k).m_min == i);
  }
}

TEST_CASE("minimal class index equals binary length surplus of a_k") {
  for (std::uint64_t k = 3; k <= 101; k += 2) {
    const auto record = niven::min_class_index(k);
    const auto solved = niven::minimal_niven(2, k);
    CHECK(record.m_min == solved.value.bit_length() - k);
  }
}

TEST_CASE("density scan counts members") {
  const auto points = niven::density_scan(13, 1);
  REQUIRE(points.size() == 6);  // x = 3, 5, 7, 9, 11, 13
  CHECK(points.back().x == 13);
  CHECK(points.back().count == 3);  // {5, 11, 13}
  CHECK(points[0].count == 0);

  const auto c2 = niven::density_scan(3, 2);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].count == 1);  // k = 3

  CHECK(niven::density_scan(1, 1).empty());
  CHECK(niven::density_scan(2, 1).empty());
}

TEST_CASE("density scan respects stride and stays within [0, 1]") {
  const auto points = niven::density_scan(101, 1, 5);
  REQUIRE(!points.empty());
  for (std::size_t i = 0; i < points.size(); ++i) {
    CHECK(points[i].x == 3 + 10 * i);
    CHECK(points[i].ratio >= 0.0);
    CHECK(points[i].ratio <= 1.0);
  }
}

TEST_CASE("density scan is deterministic under threading") {
  const auto serial = niven::density_scan(501, 2, 1, 1);
  const auto threaded = niven::density_scan(501, 2, 1, 4);
  REQUIRE(serial.size() == threaded.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].x == threaded[i].x);
    CHECK(serial[i].count == threaded[i].count);
    CHECK(serial[i].ratio == threaded[i].ratio);
  }
}

TEST_CASE("density scan supports the DP path for m >= 3") {
  const auto points = niven::density_scan(41, 3);
  REQUIRE(!points.empty());
  // count C_3 members directly against the DP
  std::uint64_t expected = 0;
  for (std::uint64_t k = 3; k <= 41; k += 2) {
    if (niven::is_in_class(k, 3)) ++expected;
  }
  CHECK(points.back().count == expected);
}
