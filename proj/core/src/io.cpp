#include "niven/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "niven/digits.hpp"
#include "niven/error.hpp"

namespace niven::io {

namespace {

constexpr std::string_view kComputeHeader = "k,a_k,c_k,digit_len";
constexpr std::string_view kDensityHeader = "x,count,ratio";
constexpr std::string_view kFigure1Header = "k,ln_ck,k_ln2,ln_lower";
constexpr std::string_view kCacheHeader = "q,k,a_k,c_k,len";

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

// Lines of a well-formed file: header first, trailing newline required.
std::vector<std::string_view> csv_lines(std::string_view text,
                                        std::string_view header) {
  if (text.empty() || text.back() != '\n') {
    throw invalid_argument_error("csv: missing trailing newline");
  }
  text.remove_suffix(1);
  std::vector<std::string_view> lines = split(text, '\n');
  if (lines.empty() || lines.front() != header) {
    throw invalid_argument_error("csv: expected header '" + std::string(header) +
                                 "'");
  }
  lines.erase(lines.begin());
  return lines;
}

std::uint64_t parse_u64(std::string_view field) {
  if (field.empty()) throw invalid_argument_error("csv: empty integer field");
  std::uint64_t v = 0;
  for (char ch : field) {
    if (ch < '0' || ch > '9') {
      throw invalid_argument_error("csv: bad integer field '" +
                                   std::string(field) + "'");
    }
    v = v * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  return v;
}

double parse_f64(std::string_view field) {
  const std::string tmp(field);
  char* end = nullptr;
  const double v = std::strtod(tmp.c_str(), &end);
  if (end != tmp.c_str() + tmp.size() || tmp.empty()) {
    throw invalid_argument_error("csv: bad float field '" + tmp + "'");
  }
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string render_compute_csv(const std::vector<ComputeRow>& rows) {
  std::string out{kComputeHeader};
  out += '\n';
  for (const ComputeRow& r : rows) {
    out += std::to_string(r.k);
    out += ',';
    out += r.a.to_decimal();
    out += ',';
    out += r.c.to_decimal();
    out += ',';
    out += std::to_string(r.digit_len);
    out += '\n';
  }
  return out;
}

std::vector<ComputeRow> parse_compute_csv(std::string_view text) {
  std::vector<ComputeRow> rows;
  for (std::string_view line : csv_lines(text, kComputeHeader)) {
    const auto fields = split(line, ',');
    if (fields.size() != 4) {
      throw invalid_argument_error("csv: expected 4 fields, got line '" +
                                   std::string(line) + "'");
    }
    rows.push_back({parse_u64(fields[0]), Natural::from_string(fields[1]),
                    Natural::from_string(fields[2]), parse_u64(fields[3])});
  }
  return rows;
}

std::string render_compute_json(const std::vector<ComputeRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ComputeRow& r : rows) {
    arr.push_back({{"k", r.k},
                   {"a_k", r.a.to_decimal()},
                   {"c_k", r.c.to_decimal()},
                   {"digit_len", r.digit_len}});
  }
  return arr.dump(2) + "\n";
}

std::vector<ComputeRow> parse_compute_json(std::string_view text) {
  std::vector<ComputeRow> rows;
  const auto arr = nlohmann::ordered_json::parse(text);
  if (!arr.is_array()) {
    throw invalid_argument_error("json: expected a top-level array");
  }
  for (const auto& obj : arr) {
    rows.push_back({obj.at("k").get<std::uint64_t>(),
                    Natural::from_string(obj.at("a_k").get<std::string>()),
                    Natural::from_string(obj.at("c_k").get<std::string>()),
                    obj.at("digit_len").get<std::uint64_t>()});
  }
  return rows;
}

std::string render_density_csv(const std::vector<DensityRow>& rows) {
  std::string out{kDensityHeader};
  out += '\n';
  for (const DensityRow& r : rows) {
    out += std::to_string(r.x);
    out += ',';
    out += std::to_string(r.count);
    out += ',';
    out += format_double(r.ratio);
    out += '\n';
  }
  return out;
}

std::vector<DensityRow> parse_density_csv(std::string_view text) {
  std::vector<DensityRow> rows;
  for (std::string_view line : csv_lines(text, kDensityHeader)) {
    const auto fields = split(line, ',');
    if (fields.size() != 3) {
      throw invalid_argument_error("csv: expected 3 fields, got line '" +
                                   std::string(line) + "'");
    }
    rows.push_back({parse_u64(fields[0]), parse_u64(fields[1]), parse_f64(fields[2])});
  }
  return rows;
}

std::string render_figure1_csv(const std::vector<Figure1Row>& rows) {
  std::string out{kFigure1Header};
  out += '\n';
  for (const Figure1Row& r : rows) {
    out += std::to_string(r.k);
    out += ',';
    out += format_double(r.ln_ck);
    out += ',';
    out += format_double(r.k_ln2);
    out += ',';
    out += format_double(r.ln_lower);
    out += '\n';
  }
  return out;
}

std::vector<Figure1Row> parse_figure1_csv(std::string_view text) {
  std::vector<Figure1Row> rows;
  for (std::string_view line : csv_lines(text, kFigure1Header)) {
    const auto fields = split(line, ',');
    if (fields.size() != 4) {
      throw invalid_argument_error("csv: expected 4 fields, got line '" +
                                   std::string(line) + "'");
    }
    rows.push_back({parse_u64(fields[0]), parse_f64(fields[1]), parse_f64(fields[2]),
                    parse_f64(fields[3])});
  }
  return rows;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw invalid_argument_error("cannot open file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw invalid_argument_error("cannot write file: " + path.string());
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) {
    throw invalid_argument_error("short write to file: " + path.string());
  }
}

ResultCache::ResultCache(std::filesystem::path file, std::uint32_t base)
    : file_(std::move(file)), base_(base) {
  if (!std::filesystem::exists(file_)) return;
  const std::string text = read_file(file_);
  std::vector<std::string_view> lines;
  try {
    lines = csv_lines(text, kCacheHeader);
  } catch (const invalid_argument_error& e) {
    throw cache_error("cache " + file_.string() + ": " + e.what());
  }
  for (std::string_view line : lines) {
    const auto fields = split(line, ',');
    ComputeRow row;
    std::uint64_t q = 0;
    try {
      if (fields.size() != 5) {
        throw invalid_argument_error("expected 5 fields");
      }
      q = parse_u64(fields[0]);
      row.k = parse_u64(fields[1]);
      row.a = Natural::from_string(fields[2]);
      row.c = Natural::from_string(fields[3]);
      row.digit_len = parse_u64(fields[4]);
    } catch (const invalid_argument_error& e) {
      throw cache_error("cache " + file_.string() + ": malformed line '" +
                        std::string(line) + "': " + e.what());
    }
    if (q != base_) {
      throw cache_error("cache " + file_.string() + ": row for base " +
                        std::to_string(q) + " in a base-" + std::to_string(base_) +
                        " cache");
    }
    // Cheap integrity checks that catch edited or truncated values.
    if (row.c * Natural(row.k) != row.a ||
        digit_sum(row.a, base_) != Natural(row.k) ||
        to_digits(row.a, base_).digits.size() != row.digit_len) {
      throw cache_error("cache " + file_.string() + ": entry for k=" +
                        std::to_string(row.k) + " fails validation");
    }
    const auto [it, inserted] = entries_.emplace(row.k, row);
    if (!inserted && !(it->second.a == row.a)) {
      throw cache_error("cache " + file_.string() + ": conflicting entries for k=" +
                        std::to_string(row.k));
    }
  }
}

std::filesystem::path ResultCache::default_file(
    const std::filesystem::path& directory, std::uint32_t base) {
  return directory / ("ak_q" + std::to_string(base) + ".csv");
}

std::optional<ComputeRow> ResultCache::lookup(std::uint64_t k) const {
  const auto it = entries_.find(k);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::store(const ComputeRow& row) {
  const auto it = entries_.find(row.k);
  if (it != entries_.end()) {
    if (it->second.a == row.a && it->second.c == row.c &&
        it->second.digit_len == row.digit_len) {
      return;
    }
    throw cache_error("cache " + file_.string() + ": recomputed value for k=" +
                      std::to_string(row.k) + " differs from the stored entry");
  }
  const bool fresh = !std::filesystem::exists(file_);
  std::ofstream out(file_, std::ios::binary | std::ios::app);
  if (!out) {
    throw cache_error("cache " + file_.string() + ": cannot open for append");
  }
  if (fresh) out << kCacheHeader << '\n';
  out << base_ << ',' << row.k << ',' << row.a.to_decimal() << ','
      << row.c.to_decimal() << ',' << row.digit_len << '\n';
  if (!out) {
    throw cache_error("cache " + file_.string() + ": append failed");
  }
  entries_.emplace(row.k, row);
}

}  // namespace niven::io
