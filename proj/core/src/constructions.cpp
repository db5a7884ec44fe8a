#include "niven/constructions.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>
#include <utility>

#include "niven/digits.hpp"
#include "niven/error.hpp"
#include "niven/modarith.hpp"

namespace niven {

namespace {

using Word = std::uint64_t;

inline bool test_bit(const Word* w, std::uint64_t i) {
  return (w[i >> 6] >> (i & 63)) & 1u;
}

inline void set_bit(Word* w, std::uint64_t i) { w[i >> 6] |= Word{1} << (i & 63); }

// dst |= rotate-left(src, s) within a k-bit ring.  src must carry no bits
// at positions >= k; the caller masks dst's top word afterwards.
void or_rotl(const Word* src, Word* dst, std::uint64_t k, std::uint64_t s,
             std::uint64_t nw) {
  s %= k;
  if (s == 0) {
    for (std::uint64_t i = 0; i < nw; ++i) dst[i] |= src[i];
    return;
  }
  // bits j < k-s move up to j+s
  {
    const std::uint64_t ws = s >> 6, bs = s & 63;
    if (bs == 0) {
      for (std::uint64_t i = nw; i-- > ws;) dst[i] |= src[i - ws];
    } else {
      for (std::uint64_t i = nw; i-- > ws;) {
        Word v = src[i - ws] << bs;
        if (i - ws > 0) v |= src[i - ws - 1] >> (64 - bs);
        dst[i] |= v;
      }
    }
  }
  // bits j >= k-s wrap down to j-(k-s)
  {
    const std::uint64_t rs = k - s;
    const std::uint64_t ws = rs >> 6, bs = rs & 63;
    if (bs == 0) {
      for (std::uint64_t i = 0; i + ws < nw; ++i) dst[i] |= src[i + ws];
    } else {
      for (std::uint64_t i = 0; i + ws < nw; ++i) {
        Word v = src[i + ws] >> bs;
        if (i + ws + 1 < nw) v |= src[i + ws + 1] << (64 - bs);
        dst[i] |= v;
      }
    }
  }
}

std::string describe(std::uint64_t k, std::uint64_t x) {
  return "k=" + std::to_string(k) + " x=" + std::to_string(x);
}

Natural geometric_power_sum(std::uint32_t base, std::uint64_t step,
                            std::uint64_t first, std::uint64_t terms) {
  // base^first + base^(first+step) + ... , `terms` summands
  Natural acc = 0;
  Natural term = Natural::pow(Natural(base), first);
  const Natural ratio = Natural::pow(Natural(base), step);
  for (std::uint64_t i = 0; i < terms; ++i) {
    acc += term;
    if (i + 1 < terms) term *= ratio;
  }
  return acc;
}

// Smallest e with value <= base^e.
std::uint64_t ceil_log_base(const Natural& value, std::uint32_t base) {
  if (value.is_zero()) {
    throw invalid_argument_error("ceil_log_base: value must be positive");
  }
  const DigitString d = to_digits(value, base);
  const std::uint64_t digits = d.digits.size();
  const bool exact_power =
      d.digits.front() == 1 &&
      std::all_of(d.digits.begin() + 1, d.digits.end(),
                  [](std::uint32_t x) { return x == 0; });
  return exact_power ? digits - 1 : digits;
}

}  // namespace

void require_valid(const ExponentSet& set) {
  if (set.modulus == 0) {
    throw verification_error("exponent set: modulus must be >= 1");
  }
  std::uint64_t sum = 0;
  std::uint64_t prev = 0;
  bool first = true;
  for (std::uint64_t j : set.exponents) {
    if (!first && j <= prev) {
      throw verification_error("exponent set: exponents must strictly increase");
    }
    if (j > set.max_exponent) {
      throw verification_error("exponent set: exponent " + std::to_string(j) +
                               " above window bound " +
                               std::to_string(set.max_exponent));
    }
    sum = (sum + pow_mod_u64(2, j, set.modulus)) % set.modulus;
    prev = j;
    first = false;
  }
  if (sum != set.residue % set.modulus) {
    throw verification_error("exponent set: residue mismatch, got " +
                             std::to_string(sum) + ", want " +
                             std::to_string(set.residue % set.modulus));
  }
}

std::optional<std::vector<std::uint64_t>> exponent_subset_dp(
    std::uint64_t k, std::uint64_t target, std::uint32_t count,
    std::uint64_t max_exponent, std::uint64_t cell_budget) {
  if (k == 0) throw invalid_argument_error("exponent_subset_dp: modulus must be >= 1");
  target %= k;

  const std::uint64_t positions = max_exponent + 1;
  const unsigned __int128 cells = static_cast<unsigned __int128>(positions + 1) *
                                  (count + 1) * k;
  if (cells > cell_budget) {
    throw resource_limit_error("exponent_subset_dp: table of " +
                               std::to_string(positions + 1) + "x" +
                               std::to_string(count + 1) + "x" +
                               std::to_string(k) + " cells exceeds the budget");
  }

  const std::uint64_t nw = (k + 63) / 64;
  const Word top_mask = (k & 63) == 0 ? ~Word{0} : (Word{1} << (k & 63)) - 1;
  std::vector<Word> table((positions + 1) * (count + 1) * nw, 0);
  auto row = [&](std::uint64_t pos, std::uint32_t c) {
    return table.data() + (pos * (count + 1) + c) * nw;
  };

  std::vector<std::uint64_t> pw(positions);
  {
    std::uint64_t cur = 1 % k;
    for (std::uint64_t p = 0; p < positions; ++p) {
      pw[p] = cur;
      cur = mul_mod_u64(cur, 2, k);
    }
  }

  set_bit(row(0, 0), 0);
  for (std::uint64_t pos = 0; pos < positions; ++pos) {
    for (std::uint32_t c = 0; c <= count; ++c) {
      Word* dst = row(pos + 1, c);
      const Word* skip = row(pos, c);
      for (std::uint64_t i = 0; i < nw; ++i) dst[i] = skip[i];
      if (c > 0) or_rotl(row(pos, c - 1), dst, k, pw[pos], nw);
      dst[nw - 1] &= top_mask;
    }
  }

  if (!test_bit(row(positions, count), target)) return std::nullopt;

  std::vector<std::uint64_t> chosen;
  chosen.reserve(count);
  std::uint32_t c = count;
  std::uint64_t r = target;
  for (std::uint64_t pos = positions; pos-- > 0;) {
    if (test_bit(row(pos, c), r)) continue;  // this exponent is not needed
    if (c == 0) {
      throw verification_error("exponent_subset_dp: backtrack underflow");
    }
    chosen.push_back(pos);
    r = (r + k - pw[pos]) % k;
    --c;
  }
  if (c != 0 || r != 0) {
    throw verification_error("exponent_subset_dp: backtrack did not close");
  }
  std::reverse(chosen.begin(), chosen.end());
  return chosen;
}

WitnessReport euler_construction(std::uint32_t base, std::uint64_t k) {
  if (base < kMinBase || base > kMaxBase) {
    throw invalid_argument_error("euler_construction: base must be in [2, 65536]");
  }
  if (k == 0) throw invalid_argument_error("euler_construction: k must be >= 1");

  WitnessReport report;
  report.construction = "euler";
  report.parameters = "base=" + std::to_string(base) + " k=" + std::to_string(k);

  const CoprimeSplit split = coprime_split(k, base);
  const std::uint64_t t = multiplicative_order(base, split.coprime).order;
  // One 1-digit every t positions: b ones, divisible by the coprime part.
  const Natural block = geometric_power_sum(base, t, 0, split.coprime);

  if (split.q_part == 1) {
    report.value = block;
    report.notes = "order=" + std::to_string(t);
  } else {
    // Spread q_part shifted copies of the block far enough apart that their
    // digits never overlap.
    const std::uint64_t u =
        std::max<std::uint64_t>(split.exponent, ceil_log_base(block, base)) + 1;
    report.value = geometric_power_sum(base, u, u, split.q_part) * block;
    report.notes = "split=" + std::to_string(split.q_part) + "*" +
                   std::to_string(split.coprime) + " order=" + std::to_string(t) +
                   " shift=" + std::to_string(u);
  }

  report.divisibility_ok = (report.value % Natural(k)).is_zero();
  report.digit_sum_ok = digit_sum(report.value, base) == Natural(k);
  report.bound_ok = true;
  if (!report.divisibility_ok || !report.digit_sum_ok) {
    throw verification_error("euler_construction: postcondition failed for " +
                             report.parameters);
  }
  return report;
}

namespace {

ExponentSet representation_constructive(std::uint64_t k, std::uint64_t x) {
  const std::uint32_t n = ceil_log2(k);
  const std::uint64_t t = multiplicative_order(2, k).order;

  // Work on x itself when it already has n bits, otherwise on x + k.
  const std::uint64_t y = (x >> (n - 1)) != 0 ? x : x + k;
  const std::uint32_t len = 64 - static_cast<std::uint32_t>(std::countl_zero(y));
  if (len != n && len != n + 1) {
    throw verification_error("representation: unexpected bit length for " +
                             describe(k, x));
  }

  std::set<std::uint64_t> chosen;
  for (std::uint32_t p = 0; p < len; ++p) {
    if ((y >> p) & 1) chosen.insert(p);
  }

  // Maximal zero runs below the leading bit, lowest first.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> gaps;
  for (std::uint32_t p = 0; p < len;) {
    if ((y >> p) & 1) {
      ++p;
      continue;
    }
    std::uint32_t lo = p;
    while (((y >> p) & 1) == 0) ++p;  // leading bit terminates the run
    gaps.emplace_back(lo, p - 1);
  }

  // A zero gap under the one at hi+1 absorbs that one: the run fills with
  // ones and the bottom of the fill reappears shifted up by the order,
  // which leaves the value unchanged mod k.  Filling every zero yields
  // exactly len ones, so when len == n+1 the lowest zero stays unfilled.
  const bool leave_lowest = (len == n + 1);
  for (auto [lo, hi] : gaps) {
    std::uint32_t fill_lo = lo;
    if (leave_lowest && lo == gaps.front().first) {
      if (lo == hi) continue;
      fill_lo = lo + 1;
    }
    chosen.erase(hi + 1);
    for (std::uint32_t p = fill_lo; p <= hi; ++p) chosen.insert(p);
    chosen.insert(fill_lo + t);
  }

  ExponentSet set;
  set.modulus = k;
  set.residue = x;
  set.max_exponent = n + k - 2;
  set.exponents.assign(chosen.begin(), chosen.end());
  return set;
}

}  // namespace

ExponentSet distinct_power_representation(std::uint64_t k, std::uint64_t x,
                                          RepresentationEngine engine) {
  if (k < 3 || k % 2 == 0) {
    throw invalid_argument_error(
        "distinct_power_representation: k must be odd and >= 3, got " +
        std::to_string(k));
  }
  if (x >= k) {
    throw invalid_argument_error("distinct_power_representation: residue " +
                                 std::to_string(x) + " out of range for k=" +
                                 std::to_string(k));
  }
  const std::uint32_t n = ceil_log2(k);

  ExponentSet set;
  if (engine == RepresentationEngine::constructive) {
    set = representation_constructive(k, x);
  } else {
    auto found = exponent_subset_dp(k, x, n, n + k - 2);
    if (!found) {
      throw verification_error("distinct_power_representation: DP found nothing for " +
                               describe(k, x));
    }
    set.modulus = k;
    set.residue = x;
    set.max_exponent = n + k - 2;
    set.exponents = std::move(*found);
  }

  if (set.exponents.size() != n) {
    throw verification_error("distinct_power_representation: expected exactly " +
                             std::to_string(n) + " exponents for " + describe(k, x) +
                             ", got " + std::to_string(set.exponents.size()));
  }
  require_valid(set);
  return set;
}

WitnessReport bounded_digit_sum_multiple(std::uint64_t k, std::uint64_t ell) {
  if (k == 0 || ell == 0) {
    throw invalid_argument_error("bounded_digit_sum_multiple: k and ell must be >= 1");
  }

  if (ell > (std::uint64_t{1} << 26) / k) {
    throw resource_limit_error("bounded_digit_sum_multiple: ell*k too large");
  }

  // Reduce to the odd part: a power-of-two factor shifts digits without
  // changing their sum.
  const std::uint32_t mu = q_adic_valuation(k, 2);
  const std::uint64_t odd = k >> mu;
  const std::uint64_t ell_odd = ell << mu;  // ell_odd * odd == ell * k

  Natural multiplier;
  std::string notes;
  if (odd == 1) {
    multiplier = Natural::pow2(ell * k) - Natural(1);
    notes = "all-ones block";
  } else {
    const std::uint32_t n_odd = ceil_log2(odd);
    const Natural all_ones = Natural::pow2(ell_odd * odd + n_odd) - Natural(1);
    const std::uint64_t residue =
        (pow_mod_u64(2, ell_odd * odd + n_odd, odd) + odd - 1) % odd;
    const ExponentSet rep = distinct_power_representation(odd, residue);
    Natural subtract = 0;
    for (std::uint64_t j : rep.exponents) subtract += Natural::pow2(j);
    const auto [quot, rem] = divmod(all_ones - subtract, Natural(odd));
    if (!rem.is_zero()) {
      throw verification_error("bounded_digit_sum_multiple: representation does "
                               "not divide out for k=" + std::to_string(k));
    }
    multiplier = quot;
    notes = "odd part " + std::to_string(odd) + ", " +
            std::to_string(rep.exponents.size()) + " bits cleared";
  }

  WitnessReport report;
  report.construction = "digit-sum-multiple";
  report.parameters = "k=" + std::to_string(k) + " ell=" + std::to_string(ell);
  report.value = multiplier;
  report.notes = notes;

  const Natural product = multiplier * Natural(k);
  report.divisibility_ok = true;  // product is a multiple of k by construction
  report.digit_sum_ok = digit_sum(product, 2) == Natural(ell * k);
  const Natural bound =
      Natural::pow2(ell * k + ceil_log2(k)) - Natural::pow2(q_adic_valuation(k, 2));
  report.bound_ok = product <= bound;
  if (!report.digit_sum_ok || !report.bound_ok) {
    throw verification_error("bounded_digit_sum_multiple: postcondition failed for " +
                             report.parameters);
  }
  return report;
}

C1ClosedForm c1_closed_form(std::uint64_t k) {
  if (k < 3 || k % 2 == 0) {
    throw invalid_argument_error("c1_closed_form: k must be odd and >= 3");
  }
  C1ClosedForm form;
  form.k = k;
  form.order = multiplicative_order(2, k).order;

  const std::uint64_t target = (pow_mod_u64(2, k + 1, k) + k - 1) % k;
  std::uint64_t cur = 1 % k;
  bool found = false;
  for (std::uint64_t j = 0; j < form.order; ++j) {
    if (cur == target) {
      form.j0 = j;
      found = true;
      break;
    }
    cur = mul_mod_u64(cur, 2, k);
  }
  if (!found) {
    throw not_in_class_error("c1_closed_form: 2^(k+1)-1 mod k is not a power of 2 "
                             "for k=" + std::to_string(k) + " (residue " +
                             std::to_string(target) + ")",
                             k, target);
  }

  // Subtract the largest admissible power: push j0 up by whole periods
  // while staying below k.
  form.shift = (k - 1 - form.j0) / form.order;
  form.j1 = form.j0 + form.shift * form.order;
  form.value = Natural::pow2(k + 1) - Natural(1) - Natural::pow2(form.j1);

  if (!(form.value % Natural(k)).is_zero() ||
      digit_sum(form.value, 2) != Natural(k) || form.j1 > k - 1) {
    throw verification_error("c1_closed_form: postcondition failed for k=" +
                             std::to_string(k));
  }
  return form;
}

MersenneWitness mersenne_value(std::uint64_t i) {
  if (i < 2) throw invalid_argument_error("mersenne_value: i must be >= 2");
  if (i > 26) {
    throw resource_limit_error("mersenne_value: the witness for i=" +
                               std::to_string(i) + " has about 2^" +
                               std::to_string(i) + " bits");
  }
  MersenneWitness w;
  w.i = i;
  w.k = (std::uint64_t{1} << i) - 1;
  w.k_minus = (i - w.k % i) % i;
  if (w.k_minus == 0) {
    throw verification_error("mersenne_value: 2^i - 1 divisible by i, i=" +
                             std::to_string(i));
  }
  w.value = Natural::pow2(w.k + w.k_minus) + Natural::pow2(w.k) -
            Natural::pow2(w.k - i) - Natural(1);
  w.is_tight = is_prime_u64(w.k);

  if (!(w.value % Natural(w.k)).is_zero() ||
      digit_sum(w.value, 2) != Natural(w.k)) {
    throw verification_error("mersenne_value: postcondition failed for i=" +
                             std::to_string(i));
  }
  return w;
}

WitnessReport prime_power_formula(std::uint32_t base, std::uint32_t m) {
  if (base < kMinBase || base > kMaxBase) {
    throw invalid_argument_error("prime_power_formula: base must be in [2, 65536]");
  }
  std::uint64_t k = 1;
  for (std::uint32_t j = 0; j < m; ++j) {
    if (k > (std::uint64_t{1} << 24) / base) {
      throw resource_limit_error("prime_power_formula: q^m too large");
    }
    k *= base;
  }

  WitnessReport report;
  report.construction = "prime-power";
  report.parameters = "base=" + std::to_string(base) + " m=" + std::to_string(m);

  if (base == 2) {
    report.value = Natural(k) * (Natural::pow2(k) - Natural(1));
    report.notes = "k=" + std::to_string(k);
  } else {
    const std::uint64_t alpha = (k - 1) / (base - 1);
    report.value =
        Natural(k) * (Natural(2) * Natural::pow(Natural(base), alpha) - Natural(1));
    report.notes = "k=" + std::to_string(k) + " alpha=" + std::to_string(alpha);
  }

  report.divisibility_ok = (report.value % Natural(k)).is_zero();
  report.digit_sum_ok = digit_sum(report.value, base) == Natural(k);
  report.bound_ok = true;
  if (!report.divisibility_ok || !report.digit_sum_ok) {
    throw verification_error("prime_power_formula: postcondition failed for " +
                             report.parameters);
  }
  return report;
}

}  // namespace niven
