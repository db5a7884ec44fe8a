#include "niven/digits.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "niven/error.hpp"

namespace niven {

namespace {

void check_base(std::uint32_t base) {
  if (base < kMinBase || base > kMaxBase) {
    throw invalid_argument_error("base must be in [2, 65536], got " +
                                 std::to_string(base));
  }
}

}  // namespace

Natural digit_sum(const Natural& n, std::uint32_t base) {
  check_base(base);
  if (n.bit_length() <= 64) {
    return Natural(digit_sum_u64(n.to_uint64(), base));
  }
  // Power-of-two bases read digits straight off the limbs; digit width is
  // 1..16 bits here, so digits never straddle a limb boundary.
  if ((base & (base - 1)) == 0) {
    std::uint32_t width = 0;
    for (std::uint32_t b = base; b > 1; b >>= 1) ++width;
    std::vector<std::uint64_t> limbs;
    boost::multiprecision::export_bits(n.value(), std::back_inserter(limbs), 64,
                                       false);
    const std::uint64_t mask = (width == 64) ? ~std::uint64_t{0}
                                             : ((std::uint64_t{1} << width) - 1);
    std::uint64_t sum = 0;
    for (std::uint64_t limb : limbs) {
      while (limb != 0) {
        sum += limb & mask;
        limb >>= width;
      }
    }
    return Natural(sum);
  }
  Natural::backend rest = n.value();
  Natural::backend q;
  Natural::backend r;
  std::uint64_t sum = 0;
  while (!rest.is_zero()) {
    boost::multiprecision::divide_qr(rest, Natural::backend(base), q, r);
    sum += r.convert_to<std::uint64_t>();
    rest.swap(q);
  }
  return Natural(sum);
}

std::uint64_t digit_sum_u64(std::uint64_t n, std::uint32_t base) {
  check_base(base);
  std::uint64_t sum = 0;
  while (n != 0) {
    sum += n % base;
    n /= base;
  }
  return sum;
}

DigitString to_digits(const Natural& n, std::uint32_t base) {
  check_base(base);
  DigitString out;
  out.base = base;
  if (n.is_zero()) {
    out.digits = {0};
    return out;
  }
  Natural::backend rest = n.value();
  Natural::backend q;
  Natural::backend r;
  while (!rest.is_zero()) {
    boost::multiprecision::divide_qr(rest, Natural::backend(base), q, r);
    out.digits.push_back(r.convert_to<std::uint32_t>());
    rest.swap(q);
  }
  std::reverse(out.digits.begin(), out.digits.end());
  return out;
}

Natural from_digits(const DigitString& d) {
  check_base(d.base);
  if (d.digits.empty()) {
    throw invalid_argument_error("digit string must not be empty");
  }
  Natural::backend acc = 0;
  for (std::uint32_t digit : d.digits) {
    if (digit >= d.base) {
      throw invalid_argument_error("digit " + std::to_string(digit) +
                                   " out of range for base " +
                                   std::to_string(d.base));
    }
    acc = acc * d.base + digit;
  }
  return Natural(std::move(acc));
}

}  // namespace niven
