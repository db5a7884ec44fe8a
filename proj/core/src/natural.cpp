#include "niven/natural.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <cmath>

#include "niven/error.hpp"

namespace niven {

namespace mp = boost::multiprecision;

Natural::Natural(backend v) : v_(std::move(v)) {
  if (v_.sign() < 0) {
    throw invalid_argument_error("Natural cannot hold a negative value");
  }
}

Natural Natural::from_string(std::string_view text) {
  if (text.empty()) {
    throw invalid_argument_error("empty string is not a number");
  }
  bool hex = text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X');
  std::string_view digits = hex ? text.substr(2) : text;
  if (digits.empty()) {
    throw invalid_argument_error("no digits after 0x prefix");
  }
  for (char c : digits) {
    bool ok = hex ? std::isxdigit(static_cast<unsigned char>(c)) != 0
                  : std::isdigit(static_cast<unsigned char>(c)) != 0;
    if (!ok) {
      throw invalid_argument_error("invalid character in number: '" +
                                   std::string(text) + "'");
    }
  }
  try {
    return Natural(backend(std::string(hex ? text : digits)));
  } catch (const std::exception& e) {
    throw invalid_argument_error("cannot parse number '" + std::string(text) +
                                 "': " + e.what());
  }
}

std::uint64_t Natural::bit_length() const {
  if (v_.is_zero()) return 0;
  return static_cast<std::uint64_t>(mp::msb(v_)) + 1;
}

bool Natural::bit(std::uint64_t i) const { return mp::bit_test(v_, static_cast<unsigned>(i)); }

std::uint64_t Natural::to_uint64() const {
  if (bit_length() > 64) {
    throw invalid_argument_error("value does not fit in 64 bits: " + to_decimal());
  }
  return v_.convert_to<std::uint64_t>();
}

std::string Natural::to_decimal() const { return v_.str(); }

std::string Natural::to_hex() const {
  std::string s = v_.str(0, std::ios_base::hex);
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

double Natural::approx_ln() const {
  if (v_.is_zero()) {
    throw invalid_argument_error("ln(0) is undefined");
  }
  const std::uint64_t bits = bit_length();
  if (bits <= 62) {
    return std::log(static_cast<double>(v_.convert_to<std::uint64_t>()));
  }
  // ln(n) = ln(top 62 bits) + (discarded bit count) * ln 2
  const std::uint64_t shift = bits - 62;
  backend top = v_ >> static_cast<unsigned>(shift);
  return std::log(static_cast<double>(top.convert_to<std::uint64_t>())) +
         static_cast<double>(shift) * M_LN2;
}

Natural Natural::pow2(std::uint64_t exponent) {
  return Natural(backend(backend(1) << static_cast<unsigned>(exponent)));
}

Natural Natural::pow(const Natural& base, std::uint64_t exponent) {
  return Natural(backend(mp::pow(base.v_, static_cast<unsigned>(exponent))));
}

Natural operator-(const Natural& a, const Natural& b) {
  if (a.v_ < b.v_) {
    throw invalid_argument_error("Natural subtraction would be negative: " +
                                 a.to_decimal() + " - " + b.to_decimal());
  }
  return Natural(Natural::backend(a.v_ - b.v_));
}

Natural operator/(const Natural& a, const Natural& b) {
  if (b.is_zero()) throw invalid_argument_error("division by zero");
  return Natural(Natural::backend(a.v_ / b.v_));
}

Natural operator%(const Natural& a, const Natural& b) {
  if (b.is_zero()) throw invalid_argument_error("modulo by zero");
  return Natural(Natural::backend(a.v_ % b.v_));
}

std::pair<Natural, Natural> divmod(const Natural& a, const Natural& b) {
  if (b.is_zero()) throw invalid_argument_error("division by zero");
  Natural::backend q;
  Natural::backend r;
  mp::divide_qr(a.v_, b.v_, q, r);
  return {Natural(std::move(q)), Natural(std::move(r))};
}

Natural gcd(const Natural& a, const Natural& b) {
  return Natural(Natural::backend(mp::gcd(a.value(), b.value())));
}

}  // namespace niven
