#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mtmf {

// Shortest round-trip decimal form, '.' separator, locale independent.
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string format_int(std::int64_t v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// Minimal CSV emitter: header row, '\n' line endings, no quoting (callers
// only pass separator-free fields). Output is byte-identical for identical
// row sequences on every platform.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::initializer_list<std::string_view> header)
      : out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error("cannot open CSV file: " + path.string());
    bool first = true;
    for (auto h : header) {
      if (!first) out_ << ',';
      out_ << h;
      first = false;
    }
    out_ << '\n';
  }

  template <typename... Fields>
  void row(const Fields&... fields) {
    bool first = true;
    (write_field(fields, first), ...);
    out_ << '\n';
  }

 private:
  template <typename T>
  void write_field(const T& f, bool& first) {
    if (!first) out_ << ',';
    first = false;
    if constexpr (std::is_same_v<T, double> || std::is_same_v<T, float>) {
      out_ << format_double(f);
    } else if constexpr (std::is_integral_v<T>) {
      out_ << format_int(static_cast<std::int64_t>(f));
    } else {
      out_ << f;
    }
  }

  std::ofstream out_;
};

}  // namespace mtmf
