#pragma once

// Deterministic text output: shortest round-trip doubles and versioned CSV.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

namespace entropic::cli {

inline constexpr std::string_view kToolName = "entropic-lab";
inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kCsvFormatVersion = 1;

// Shortest representation that parses back to the same double.
inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

class Csv {
 public:
  // First line: "# entropic-lab csv v1 <kind>".
  Csv(std::string_view kind, const std::vector<std::string>& columns) {
    text_ = "# " + std::string(kToolName) + " csv v" + std::to_string(kCsvFormatVersion) + " " + std::string(kind) + "\n";
    for (std::size_t i = 0; i < columns.size(); ++i) text_ += (i ? "," : "") + columns[i];
    text_ += '\n';
  }

  Csv& field(double v) { return raw(format_double(v)); }
  Csv& field(long long v) { return raw(std::to_string(v)); }
  Csv& field(std::size_t v) { return raw(std::to_string(v)); }
  Csv& field(int v) { return raw(std::to_string(v)); }
  Csv& field(std::string_view v) { return raw(std::string(v)); }
  Csv& field(const char* v) { return raw(v); }

  Csv& end_row() {
    text_ += '\n';
    first_ = true;
    return *this;
  }

  const std::string& str() const { return text_; }

 private:
  Csv& raw(const std::string& s) {
    if (!first_) text_ += ',';
    text_ += s;
    first_ = false;
    return *this;
  }

  std::string text_;
  bool first_ = true;
};

}  // namespace entropic::cli
