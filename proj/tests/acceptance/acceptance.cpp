// Acceptance suite: every release criterion gets one pass/fail line.  All
// integer comparisons are exact; stated runtime budgets are enforced.
//
// Usage: niven_acceptance <path-to-niven-binary>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "niven/classes.hpp"
#include "niven/constructions.hpp"
#include "niven/digits.hpp"
#include "niven/error.hpp"
#include "niven/io.hpp"
#include "niven/modarith.hpp"
#include "niven/solver.hpp"

namespace {

std::string g_cli;
int g_failures = 0;

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliResult result;
  if (pipe == nullptr) return result;
  char buf[8192];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

void criterion(int id, const std::string& name, double budget_seconds,
               const std::function<std::optional<std::string>()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::optional<std::string> failure;
  try {
    failure = body();
  } catch (const std::exception& e) {
    failure = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (!failure && budget_seconds > 0 && elapsed > budget_seconds) {
    failure = "runtime " + std::to_string(elapsed) + "s exceeds budget of " +
              std::to_string(budget_seconds) + "s";
  }
  if (failure) {
    ++g_failures;
    std::printf("[FAIL] criterion %d: %s (%.2fs) -- %s\n", id, name.c_str(),
                elapsed, failure->c_str());
  } else {
    std::printf("[PASS] criterion %d: %s (%.2fs)\n", id, name.c_str(), elapsed);
  }
  std::fflush(stdout);
}

std::optional<std::string> check_base10_table() {
  const auto r = run_cli("compute --base 10 --k 10..23");
  if (r.exit_code != 0) return "compute exited with " + std::to_string(r.exit_code);
  const std::string expected =
      "k,a_k,c_k,digit_len\n"
      "10,190,19,3\n"
      "11,209,19,3\n"
      "12,48,4,2\n"
      "13,247,19,3\n"
      "14,266,19,3\n"
      "15,195,13,3\n"
      "16,448,28,3\n"
      "17,476,28,3\n"
      "18,198,11,3\n"
      "19,874,46,3\n"
      "20,3980,199,4\n"
      "21,399,19,3\n"
      "22,2398,109,4\n"
      "23,1679,73,4\n";
  if (r.output != expected) return "table mismatch";
  return std::nullopt;
}

std::optional<std::string> check_binary_goldens() {
  using niven::Natural;
  const struct {
    std::uint64_t k;
    const char* quotient;
  } quotients[] = {{1, "1"}, {2, "3"}, {3, "7"}, {20, "209715"}};
  for (const auto& expected : quotients) {
    const auto r = niven::minimal_niven(2, expected.k);
    if (r.quotient != Natural::from_string(expected.quotient)) {
      return "c_" + std::to_string(expected.k) + " != " + expected.quotient;
    }
  }
  const struct {
    std::uint64_t k;
    Natural value;
  } values[] = {
      {5, Natural(55)},
      {25, Natural(66584575)},
      {29, Natural(1073741791)},
      {253, Natural::pow2(254) - Natural(1) - Natural::pow2(242)},
  };
  for (const auto& expected : values) {
    if (niven::minimal_niven(2, expected.k).value != expected.value) {
      return "a_" + std::to_string(expected.k) + " mismatch";
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_sandwich() {
  using niven::Natural;
  for (std::uint64_t k = 1; k <= 128; ++k) {
    const auto r = niven::minimal_niven(2, k);
    const Natural low = Natural::pow2(k) - Natural(1);
    const Natural high = Natural::pow2(k + niven::ceil_log2(k)) -
                         Natural::pow2(niven::q_adic_valuation(k, 2));
    if (r.value < low || high < r.value) {
      return "bounds violated at k=" + std::to_string(k);
    }
    const bool power_of_two = k >= 2 && (k & (k - 1)) == 0;
    if (power_of_two && r.value != high) {
      return "upper bound not attained at k=" + std::to_string(k);
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_closed_forms() {
  using niven::Natural;
  for (std::uint64_t k = 3; k <= 255; k += 2) {
    if (!niven::fast_c1(k)) continue;
    if (niven::c1_closed_form(k).value != niven::minimal_niven(2, k).value) {
      return "c1 closed form mismatch at k=" + std::to_string(k);
    }
  }
  for (const std::uint32_t q : {2u, 3u, 10u}) {
    std::uint64_t k = 1;
    for (std::uint32_t m = 0; k <= 100; ++m) {
      if (niven::prime_power_formula(q, m).value != niven::minimal_niven(q, k).value) {
        return "prime power mismatch at q=" + std::to_string(q) +
               " m=" + std::to_string(m);
      }
      k *= q;
    }
  }
  for (const std::uint64_t i : {2ull, 3ull, 5ull}) {
    const auto w = niven::mersenne_value(i);
    if (w.value != niven::minimal_niven(2, w.k).value) {
      return "mersenne mismatch at i=" + std::to_string(i);
    }
  }
  const auto w4 = niven::mersenne_value(4);
  if (niven::minimal_niven(2, 15).value > w4.value) {
    return "mersenne i=4 is not an upper bound";
  }
  return std::nullopt;
}

std::optional<std::string> check_class_bridge() {
  for (std::uint64_t k = 3; k <= 255; k += 2) {
    const auto record = niven::min_class_index(k);
    const auto solved = niven::minimal_niven(2, k);
    if (record.m_min != solved.value.bit_length() - k) {
      return "bridge broken at k=" + std::to_string(k);
    }
  }
  const struct {
    std::uint64_t k;
    std::uint32_t m;
  } placements[] = {{3, 2}, {7, 3}, {31, 5}};
  for (const auto& p : placements) {
    if (niven::min_class_index(p.k).m_min != p.m) {
      return "placement wrong for k=" + std::to_string(p.k);
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_representations() {
  for (std::uint64_t k = 3; k <= 101; k += 2) {
    const std::uint32_t n = niven::ceil_log2(k);
    for (std::uint64_t x = 0; x < k; ++x) {
      for (const auto engine : {niven::RepresentationEngine::constructive,
                                niven::RepresentationEngine::dp_search}) {
        niven::ExponentSet set;
        try {
          set = niven::distinct_power_representation(k, x, engine);
        } catch (const std::exception& e) {
          return "engine failed at k=" + std::to_string(k) +
                 " x=" + std::to_string(x) + ": " + e.what();
        }
        if (set.exponents.size() != n) {
          return "wrong count at k=" + std::to_string(k) + " x=" + std::to_string(x);
        }
        niven::require_valid(set);  // throws on any structural defect
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_fast_equivalence() {
  for (std::uint64_t k = 3; k <= 501; k += 2) {
    if (niven::fast_c1(k) != niven::is_in_class(k, 1)) {
      return "c1 disagreement at k=" + std::to_string(k);
    }
    if (niven::fast_c2(k) != niven::is_in_class(k, 2)) {
      return "c2 disagreement at k=" + std::to_string(k);
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_density_scan() {
  namespace io = niven::io;
  const auto dir = std::filesystem::temp_directory_path() /
                   ("niven-acceptance-" + std::to_string(std::random_device{}()));
  std::filesystem::create_directories(dir);
  struct Cleanup {
    std::filesystem::path d;
    ~Cleanup() { std::filesystem::remove_all(d); }
  } cleanup{dir};

  std::vector<std::vector<io::DensityRow>> scans;
  for (const std::uint32_t m : {1u, 2u}) {
    const auto out = dir / ("density_m" + std::to_string(m) + ".csv");
    const auto r = run_cli("classes --scan 20001 --m " + std::to_string(m) +
                           " --threads 4 --out " + out.string());
    if (r.exit_code != 0) {
      return "scan m=" + std::to_string(m) + " exited with " +
             std::to_string(r.exit_code);
    }
    const std::string text = io::read_file(out);
    const auto rows = io::parse_density_csv(text);
    if (rows.empty()) return "scan m=" + std::to_string(m) + " emitted nothing";
    if (io::render_density_csv(rows) != text) {
      return "density file does not round-trip byte-exactly";
    }
    for (const auto& row : rows) {
      if (row.ratio < 0.0 || row.ratio > 1.0) {
        return "ratio out of [0,1] at x=" + std::to_string(row.x);
      }
    }
    scans.push_back(rows);
  }
  if (scans[0].size() != scans[1].size()) return "scan lengths differ";
  for (std::size_t i = 0; i < scans[0].size(); ++i) {
    if (scans[0][i].count > scans[1][i].count) {
      return "C1 count exceeds C2 count at x=" + std::to_string(scans[0][i].x);
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_existence() {
  using niven::Natural;
  for (const std::uint32_t q : {2u, 3u, 10u, 16u}) {
    for (std::uint64_t k = 1; k <= 200; ++k) {
      const auto solved = niven::minimal_niven(q, k);
      if (!solved.found) return "solver failed at q=" + std::to_string(q) +
                                " k=" + std::to_string(k);
      if (!(solved.value % Natural(k)).is_zero() ||
          niven::digit_sum(solved.value, q) != Natural(k)) {
        return "solver result invalid at q=" + std::to_string(q) +
               " k=" + std::to_string(k);
      }
      const auto witness = niven::euler_construction(q, k);
      if (!witness.divisibility_ok || !witness.digit_sum_ok) {
        return "construction unverified at q=" + std::to_string(q) +
               " k=" + std::to_string(k);
      }
      if (witness.value < solved.value) {
        return "construction beat the minimum at q=" + std::to_string(q) +
               " k=" + std::to_string(k);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-niven-binary>\n", argv[0]);
    return 2;
  }
  g_cli = argv[1];

  criterion(1, "base-10 table reproduction", 1.0, check_base10_table);
  criterion(2, "binary golden values", 5.0, check_binary_goldens);
  criterion(3, "lower/upper bound sandwich, k <= 128", 60.0, check_sandwich);
  criterion(4, "closed forms agree with the solver", 0.0, check_closed_forms);
  criterion(5, "class index equals binary length surplus", 0.0, check_class_bridge);
  criterion(6, "distinct-power representations, k <= 101", 30.0,
            check_representations);
  criterion(7, "fast class tests match the DP, k <= 501", 0.0,
            check_fast_equivalence);
  criterion(8, "density scan to 20001 with byte-exact files", 600.0,
            check_density_scan);
  criterion(9, "solver and construction exist on the full grid", 0.0,
            check_existence);

  if (g_failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
