#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace scitrade::csv {

/// Line-oriented CSV reader. Skips blank lines and '#' comment lines
/// (generated files carry their RNG seed in such a comment). Fields may be
/// double-quoted when they contain commas or quotes; quotes are doubled to
/// escape. Tracks 1-based line numbers for error reporting.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  /// Reads the next data row. Returns false at end of input.
  bool next(std::vector<std::string>& fields);

  std::size_t line_number() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

/// Splits one CSV line; understands double-quoted fields.
std::vector<std::string> split_line(std::string_view line);

/// Quotes `field` if it contains a comma, quote, or newline.
std::string escape(std::string_view field);

/// Joins fields into one line, escaping as needed (no trailing newline).
std::string join(const std::vector<std::string>& fields);

/// Renders a double with 6 significant digits (report convention).
std::string format_double(double value);

/// Rounds to the 6-significant-digit value format_double would print,
/// so JSON and CSV report bodies agree.
double round_sig6(double value);

}  // namespace scitrade::csv
