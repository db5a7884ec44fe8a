#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "niven/natural.hpp"

namespace niven::io {

// All emitters are deterministic: fixed header, rows by ascending key,
// big integers as plain decimal strings, doubles at 17 significant digits
// so parse + re-render is byte-identical.

struct ComputeRow {
  std::uint64_t k = 0;
  Natural a;  // minimal Niven number
  Natural c;  // a / k
  std::uint64_t digit_len = 0;
};

struct DensityRow {
  std::uint64_t x = 0;
  std::uint64_t count = 0;
  double ratio = 0.0;
};

struct Figure1Row {
  std::uint64_t k = 0;
  double ln_ck = 0.0;
  double k_ln2 = 0.0;
  double ln_lower = 0.0;  // ln(2^k - 1) - ln k
};

std::string format_double(double v);

std::string render_compute_csv(const std::vector<ComputeRow>& rows);
std::vector<ComputeRow> parse_compute_csv(std::string_view text);
std::string render_compute_json(const std::vector<ComputeRow>& rows);
std::vector<ComputeRow> parse_compute_json(std::string_view text);

std::string render_density_csv(const std::vector<DensityRow>& rows);
std::vector<DensityRow> parse_density_csv(std::string_view text);

std::string render_figure1_csv(const std::vector<Figure1Row>& rows);
std::vector<Figure1Row> parse_figure1_csv(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// Append-only CSV of solved values for one base, columns q,k,a_k,c_k,len.
// Every row is revalidated on load (quotient, digit sum, length); any
// mismatch or malformed line raises cache_error.
class ResultCache {
 public:
  ResultCache(std::filesystem::path file, std::uint32_t base);

  static std::filesystem::path default_file(const std::filesystem::path& directory,
                                            std::uint32_t base);

  std::optional<ComputeRow> lookup(std::uint64_t k) const;
  // Appends a freshly computed row; a pre-existing entry must match exactly.
  void store(const ComputeRow& row);
  std::size_t size() const { return entries_.size(); }

 private:
  std::filesystem::path file_;
  std::uint32_t base_;
  std::map<std::uint64_t, ComputeRow> entries_;
};

}  // namespace niven::io
