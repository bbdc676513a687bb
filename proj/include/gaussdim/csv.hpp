#ifndef GAUSSDIM_CSV_HPP
#define GAUSSDIM_CSV_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gaussdim {

inline constexpr const char* kVersion = "gaussdim 0.1.0";

/// One value formatted with 12 significant digits, locale-independent.
std::string format_number(double v);

/// CSV writer: `#`-prefixed metadata comments, a header row, then data rows.
/// Numbers are printed with 12 significant digits; empty optionals print as
/// empty fields.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void comment(const std::string& key, const std::string& value);
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& fields);

  static std::string field(double v) { return format_number(v); }
  static std::string field(const std::optional<double>& v) {
    return v ? format_number(*v) : std::string();
  }
  static std::string field(long v) { return std::to_string(v); }
  static std::string field(int v) { return std::to_string(v); }
  static std::string field(unsigned long long v) { return std::to_string(v); }
  static std::string field(bool v) { return v ? "1" : "0"; }
  static std::string field(const std::string& v) { return v; }

 private:
  std::ostream& out_;
};

}  // namespace gaussdim

#endif
