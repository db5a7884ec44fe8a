// niven: computes minimal Niven numbers a_k exactly, verifies the closed
// formulas and bounds against the solver, and scans the classes that locate
// the binary length of a_k.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "niven/classes.hpp"
#include "niven/constructions.hpp"
#include "niven/digits.hpp"
#include "niven/error.hpp"
#include "niven/io.hpp"
#include "niven/modarith.hpp"
#include "niven/parallel.hpp"
#include "niven/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;
constexpr int kExitCacheCorruption = 4;

struct RunConfig {
  std::uint32_t base = 2;
  std::uint64_t k_low = 1;
  std::uint64_t k_high = 1;
  std::uint64_t max_k = 0;
  std::uint64_t scan_max = 0;
  std::uint32_t m = 1;
  std::uint64_t stride = 1;
  std::string format = "csv";
  std::string out_path;
  std::string cache_dir;
  bool recheck = false;
  unsigned threads = 1;
  std::uint64_t state_cap = std::uint64_t{1} << 28;
};

niven::SolverOptions solver_options(const RunConfig& cfg) {
  niven::SolverOptions opt;
  opt.state_cap = cfg.state_cap;
  return opt;
}

void emit(const RunConfig& cfg, const std::string& payload) {
  if (cfg.out_path.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
  } else {
    niven::io::write_file(cfg.out_path, payload);
  }
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto sep = text.find("..");
  try {
    if (sep == std::string::npos) {
      const std::uint64_t k = std::stoull(text);
      return {k, k};
    }
    const std::uint64_t lo = std::stoull(text.substr(0, sep));
    const std::uint64_t hi = std::stoull(text.substr(sep + 2));
    if (lo == 0 || hi < lo) {
      throw niven::invalid_argument_error("bad range: " + text);
    }
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw niven::invalid_argument_error("bad range: " + text);
  } catch (const std::out_of_range&) {
    throw niven::invalid_argument_error("range out of bounds: " + text);
  }
}

std::optional<niven::io::ResultCache> open_cache(const RunConfig& cfg) {
  std::string dir = cfg.cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("NIVEN_CACHE_DIR")) dir = env;
  }
  if (dir.empty()) return std::nullopt;
  std::filesystem::create_directories(dir);
  return niven::io::ResultCache(niven::io::ResultCache::default_file(dir, cfg.base),
                                cfg.base);
}

int cmd_compute(const RunConfig& cfg) {
  auto cache = open_cache(cfg);
  const std::uint64_t n = cfg.k_high - cfg.k_low + 1;

  std::vector<niven::io::ComputeRow> rows(n);
  std::vector<std::uint8_t> fresh(n, 0);
  niven::parallel_for(n, cfg.threads, [&](std::uint64_t i) {
    const std::uint64_t k = cfg.k_low + i;
    const auto cached = cache ? cache->lookup(k) : std::nullopt;
    if (cached && !cfg.recheck) {
      rows[i] = *cached;
      return;
    }
    const niven::SolverResult r = niven::minimal_niven(cfg.base, k, solver_options(cfg));
    rows[i] = {k, r.value, r.quotient, r.digit_count};
    if (cached && !(cached->a == rows[i].a)) {
      throw niven::cache_error("cache entry for k=" + std::to_string(k) +
                               " does not match recomputation");
    }
    fresh[i] = 1;
  });
  if (cache) {
    for (std::uint64_t i = 0; i < n; ++i) {
      if (fresh[i]) cache->store(rows[i]);
    }
  }

  emit(cfg, cfg.format == "json" ? niven::io::render_compute_json(rows)
                                 : niven::io::render_compute_csv(rows));
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  const std::uint64_t max_k = cfg.max_k;
  std::vector<niven::SolverResult> results(max_k + 1);
  niven::parallel_for(max_k, cfg.threads, [&](std::uint64_t i) {
    results[i + 1] = niven::minimal_niven(cfg.base, i + 1, solver_options(cfg));
  });

  bool all_ok = true;
  auto report = [&](const std::string& name, std::uint64_t bad_k,
                    const std::string& detail) {
    if (bad_k == 0) {
      std::printf("check %-18s ok\n", name.c_str());
    } else {
      std::printf("check %-18s FAIL at k=%llu%s\n", name.c_str(),
                  static_cast<unsigned long long>(bad_k),
                  detail.empty() ? "" : (" (" + detail + ")").c_str());
      all_ok = false;
    }
  };
  auto skipped = [](const std::string& name) {
    std::printf("check %-18s skipped (base 2 only)\n", name.c_str());
  };

  {  // a_k == k modulo base-1
    std::uint64_t bad = 0;
    for (std::uint64_t k = 1; k <= max_k && bad == 0; ++k) {
      const niven::Natural lhs = results[k].value % niven::Natural(cfg.base - 1);
      if (lhs != niven::Natural(k % (cfg.base - 1))) bad = k;
    }
    report("congruence", bad, "");
  }

  if (cfg.base == 2) {  // 2^k - 1 <= a_k <= 2^(k+n_k) - 2^(v2(k))
    std::uint64_t bad = 0;
    for (std::uint64_t k = 1; k <= max_k && bad == 0; ++k) {
      const niven::Natural low = niven::Natural::pow2(k) - niven::Natural(1);
      const niven::Natural high = niven::Natural::pow2(k + niven::ceil_log2(k)) -
                                  niven::Natural::pow2(niven::q_adic_valuation(k, 2));
      if (results[k].value < low || high < results[k].value) bad = k;
    }
    report("bounds", bad, "");
  } else {
    skipped("bounds");
  }

  {  // closed form at k = base^m
    std::uint64_t bad = 0;
    std::uint64_t k = 1;
    for (std::uint32_t m = 0; k <= max_k; ++m) {
      if (niven::prime_power_formula(cfg.base, m).value != results[k].value) {
        bad = k;
        break;
      }
      if (k > max_k / cfg.base) break;
      k *= cfg.base;
    }
    report("prime-power", bad, "");
  }

  if (cfg.base == 2) {  // closed form on the k with binary length k+1
    std::uint64_t bad = 0;
    for (std::uint64_t k = 3; k <= max_k && bad == 0; k += 2) {
      if (!niven::fast_c1(k)) continue;
      if (niven::c1_closed_form(k).value != results[k].value) bad = k;
    }
    report("c1-closed-form", bad, "");
  } else {
    skipped("c1-closed-form");
  }

  if (cfg.base == 2) {  // 2^i - 1 witnesses: upper bounds, exact at primes
    std::uint64_t bad = 0;
    for (std::uint64_t i = 2; ((std::uint64_t{1} << i) - 1) <= max_k; ++i) {
      const niven::MersenneWitness w = niven::mersenne_value(i);
      if (results[w.k].value > w.value ||
          (w.is_tight && results[w.k].value != w.value)) {
        bad = w.k;
        break;
      }
    }
    report("mersenne", bad, "");
  } else {
    skipped("mersenne");
  }

  std::printf("verify: %s (base %u, k <= %llu)\n", all_ok ? "PASS" : "FAIL",
              cfg.base, static_cast<unsigned long long>(max_k));
  return all_ok ? kExitOk : kExitVerifyFailure;
}

int cmd_classes_single(const RunConfig& cfg) {
  const niven::ClassRecord record = niven::min_class_index(cfg.k_low);
  std::printf("k: %llu\n", static_cast<unsigned long long>(record.k));
  std::printf("m_min: %u\n", record.m_min);
  if (record.witness) {
    std::printf("witness exponents:");
    for (const std::uint64_t j : record.witness->exponents) {
      std::printf(" %llu", static_cast<unsigned long long>(j));
    }
    std::printf("\n");
    std::printf("witness residue: %llu (mod %llu)\n",
                static_cast<unsigned long long>(record.witness->residue),
                static_cast<unsigned long long>(record.witness->modulus));
  }
  return kExitOk;
}

int cmd_classes_scan(const RunConfig& cfg) {
  niven::ClassOptions options;
  options.cell_budget = cfg.state_cap;
  const auto points =
      niven::density_scan(cfg.scan_max, cfg.m, cfg.stride, cfg.threads, options);
  std::vector<niven::io::DensityRow> rows;
  rows.reserve(points.size());
  for (const auto& p : points) rows.push_back({p.x, p.count, p.ratio});
  emit(cfg, niven::io::render_density_csv(rows));
  return kExitOk;
}

int cmd_figure1(const RunConfig& cfg) {
  const std::uint64_t n = cfg.max_k;
  std::vector<niven::io::Figure1Row> rows(n);
  niven::parallel_for(n, cfg.threads, [&](std::uint64_t i) {
    const std::uint64_t k = i + 1;
    const niven::SolverResult r = niven::minimal_niven(cfg.base, k, solver_options(cfg));
    rows[i] = {k, r.quotient.approx_ln(), static_cast<double>(k) * M_LN2,
               (niven::Natural::pow2(k) - niven::Natural(1)).approx_ln() -
                   std::log(static_cast<double>(k))};
  });
  emit(cfg, niven::io::render_figure1_csv(rows));
  return kExitOk;
}

void print_value_lines(const niven::Natural& value, std::uint32_t base) {
  std::printf("value: %s\n", value.to_decimal().c_str());
  if (base == 2) {
    const niven::DigitString bits = niven::to_digits(value, 2);
    std::string rendered;
    rendered.reserve(bits.digits.size());
    for (const std::uint32_t b : bits.digits) rendered += static_cast<char>('0' + b);
    std::printf("binary: %s\n", rendered.c_str());
  }
}

void print_report(const niven::WitnessReport& report, std::uint32_t base) {
  std::printf("construction: %s\n", report.construction.c_str());
  std::printf("parameters: %s\n", report.parameters.c_str());
  print_value_lines(report.value, base);
  if (!report.notes.empty()) std::printf("notes: %s\n", report.notes.c_str());
  std::printf("verified: divisibility=%s digit-sum=%s bound=%s\n",
              report.divisibility_ok ? "yes" : "no",
              report.digit_sum_ok ? "yes" : "no", report.bound_ok ? "yes" : "no");
}

int cmd_witness(const std::string& name, const RunConfig& cfg, std::uint64_t x,
                std::uint64_t ell, std::uint64_t mersenne_i, std::uint32_t power_m,
                const std::string& engine) {
  if (name == "euler") {
    print_report(niven::euler_construction(cfg.base, cfg.k_low), cfg.base);
  } else if (name == "thm33") {
    const niven::WitnessReport report = niven::bounded_digit_sum_multiple(cfg.k_low, ell);
    print_report(report, 2);
    std::printf("product: %s\n",
                (report.value * niven::Natural(cfg.k_low)).to_decimal().c_str());
  } else if (name == "c1") {
    const niven::C1ClosedForm form = niven::c1_closed_form(cfg.k_low);
    std::printf("construction: c1-closed-form\n");
    std::printf("parameters: k=%llu\n", static_cast<unsigned long long>(form.k));
    print_value_lines(form.value, 2);
    std::printf("notes: order=%llu j0=%llu shift=%llu j1=%llu\n",
                static_cast<unsigned long long>(form.order),
                static_cast<unsigned long long>(form.j0),
                static_cast<unsigned long long>(form.shift),
                static_cast<unsigned long long>(form.j1));
    std::printf("verified: divisibility=yes digit-sum=yes bound=yes\n");
  } else if (name == "mersenne") {
    const niven::MersenneWitness w = niven::mersenne_value(mersenne_i);
    std::printf("construction: mersenne\n");
    std::printf("parameters: i=%llu k=%llu\n", static_cast<unsigned long long>(w.i),
                static_cast<unsigned long long>(w.k));
    print_value_lines(w.value, 2);
    std::printf("notes: k_minus=%llu tight=%s\n",
                static_cast<unsigned long long>(w.k_minus),
                w.is_tight ? "yes" : "no");
    std::printf("verified: divisibility=yes digit-sum=yes bound=yes\n");
  } else if (name == "primepower") {
    print_report(niven::prime_power_formula(cfg.base, power_m), cfg.base);
  } else if (name == "lemma2") {
    const auto chosen = engine == "dp" ? niven::RepresentationEngine::dp_search
                                       : niven::RepresentationEngine::constructive;
    const niven::ExponentSet set =
        niven::distinct_power_representation(cfg.k_low, x, chosen);
    std::printf("construction: distinct-power-representation\n");
    std::printf("parameters: k=%llu x=%llu engine=%s\n",
                static_cast<unsigned long long>(cfg.k_low),
                static_cast<unsigned long long>(x),
                engine == "dp" ? "dp" : "constructive");
    std::printf("exponents:");
    niven::Natural sum = 0;
    for (const std::uint64_t j : set.exponents) {
      std::printf(" %llu", static_cast<unsigned long long>(j));
      sum += niven::Natural::pow2(j);
    }
    std::printf("\n");
    print_value_lines(sum, 2);
    std::printf("verified: count=%zu window<=%llu residue=yes\n",
                set.exponents.size(),
                static_cast<unsigned long long>(set.max_exponent));
  } else {
    throw niven::invalid_argument_error("unknown witness construction: " + name);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact minimal Niven number toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string k_range = "1";
  std::string witness_name;
  std::uint64_t witness_x = 0;
  std::uint64_t witness_ell = 1;
  std::uint64_t witness_i = 2;
  std::uint32_t witness_m = 0;
  std::string witness_engine = "constructive";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "worker threads for per-k sweeps");
    sub->add_option("--state-cap", cfg.state_cap,
                    "max solver states / DP cells before giving up");
  };

  CLI::App* compute = app.add_subcommand("compute", "a_k and c_k over a range of k");
  compute->add_option("--base", cfg.base, "digit base q")->required();
  compute->add_option("--k", k_range, "single k or inclusive range lo..hi")->required();
  compute->add_option("--format", cfg.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  compute->add_option("--out", cfg.out_path, "write output to this file");
  compute->add_option("--cache", cfg.cache_dir,
                      "cache directory (default: $NIVEN_CACHE_DIR)");
  compute->add_flag("--recheck", cfg.recheck,
                    "recompute cached entries and fail on mismatch");
  add_common(compute);

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--base", cfg.base, "digit base q")->required();
  verify->add_option("--max", cfg.max_k, "verify all k up to this bound")->required();
  add_common(verify);

  CLI::App* classes = app.add_subcommand("classes", "class membership and density");
  auto* classes_k = classes->add_option("--k", k_range, "single odd k to classify");
  auto* classes_scan =
      classes->add_option("--scan", cfg.scan_max, "density scan over odd k up to this x");
  classes_scan->excludes(classes_k);
  classes->add_option("--m", cfg.m, "class index for --scan");
  classes->add_option("--stride", cfg.stride, "emit every stride-th odd x");
  classes->add_option("--out", cfg.out_path, "write output to this file");
  add_common(classes);

  CLI::App* figure1 = app.add_subcommand("figure1", "ln c_k curve data");
  figure1->add_option("--max", cfg.max_k, "emit rows for k = 1..max")->required();
  figure1->add_option("--base", cfg.base, "digit base q");
  figure1->add_option("--out", cfg.out_path, "write output to this file");
  add_common(figure1);

  CLI::App* witness = app.add_subcommand("witness", "build and check one construction");
  witness->add_option("name", witness_name,
                      "euler|thm33|c1|mersenne|primepower|lemma2")
      ->required();
  witness->add_option("--base", cfg.base, "digit base q (euler, primepower)");
  witness->add_option("--k", k_range, "k parameter");
  witness->add_option("--x", witness_x, "target residue (lemma2)");
  witness->add_option("--ell", witness_ell, "digit-sum multiplier (thm33)");
  witness->add_option("--i", witness_i, "Mersenne exponent (mersenne)");
  witness->add_option("--m", witness_m, "power exponent (primepower)");
  witness->add_option("--engine", witness_engine, "constructive or dp (lemma2)")
      ->check(CLI::IsMember({"constructive", "dp"}));
  add_common(witness);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    std::tie(cfg.k_low, cfg.k_high) = parse_range(k_range);
    if (compute->parsed()) return cmd_compute(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (classes->parsed()) {
      if (classes->count("--scan") != 0) return cmd_classes_scan(cfg);
      if (classes->count("--k") != 0) return cmd_classes_single(cfg);
      throw niven::invalid_argument_error("classes: need --k or --scan");
    }
    if (figure1->parsed()) return cmd_figure1(cfg);
    if (witness->parsed()) {
      return cmd_witness(witness_name, cfg, witness_x, witness_ell, witness_i,
                         witness_m, witness_engine);
    }
    return kExitUsage;
  } catch (const niven::resource_limit_error& e) {
    std::fprintf(stderr, "resource limit: %s\n", e.what());
    return kExitResourceLimit;
  } catch (const niven::cache_error& e) {
    std::fprintf(stderr, "cache corruption: %s\n", e.what());
    return kExitCacheCorruption;
  } catch (const niven::not_in_class_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const niven::not_coprime_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const niven::invalid_argument_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const niven::verification_error& e) {
    std::fprintf(stderr, "verification failure: %s\n", e.what());
    return kExitVerifyFailure;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitVerifyFailure;
  }
}
