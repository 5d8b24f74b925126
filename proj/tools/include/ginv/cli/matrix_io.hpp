#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "ginv/error.hpp"
#include "ginv/matrix.hpp"

namespace ginv::cli {

/// Matrix text could not be parsed. Line and column are 1-based.
class ParseError : public Error {
public:
  enum class Kind { kSyntax, kZeroDenominator, kRaggedRow, kEmpty, kHeaderMismatch };

  ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& what);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

/// Plain-text matrix format:
///   # comment
///   rows cols          (optional header)
///   1 -2/3 1/2+3/4i    (one row per line, whitespace-separated entries)
/// Entries are exact: "n", "n/d", "n/d+m/ki" or "n/d+m/k i". Floats are
/// rejected. A first line of two positive integers is taken as the header
/// only when the remaining lines match it; serialize() always writes one.
Matrix parse_matrix(std::string_view text);

/// One entry, e.g. "-3/4", "1/2-1/3i", "i".
Scalar parse_scalar(std::string_view token);

/// Header line plus one line per row; parse_matrix(serialize(m)) == m.
std::string serialize(const Matrix& m);

/// Human-oriented layout with the common denominator factored out:
///   (1/120) *
///     -30  60  40  10
std::string pretty(const Matrix& m, std::string_view indent = "  ");

}  // namespace ginv::cli
