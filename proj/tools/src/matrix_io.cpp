#include "ginv/cli/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace ginv::cli {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::vector<Token> tokens;
  std::size_t number;
};

std::string describe(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::kSyntax: return "syntax error";
    case ParseError::Kind::kZeroDenominator: return "zero denominator";
    case ParseError::Kind::kRaggedRow: return "ragged row";
    case ParseError::Kind::kEmpty: return "empty matrix";
    case ParseError::Kind::kHeaderMismatch: return "header mismatch";
  }
  return "parse error";
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

// [+-]?digits('/'digits)?; an empty body (sign only) means one when allowed.
mpq_class parse_rational(std::string_view s, bool allow_implicit_one) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) {
    if (!allow_implicit_one) throw std::invalid_argument("missing number");
    return negative ? -1 : 1;
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("malformed rational");
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::domain_error("zero denominator");
  mpq_class q(mpz_class(std::string(num), 10), d);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    Line line{{}, number};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      std::string tok(raw.substr(i, j - i));
      // "1/2+3/4 i": a lone "i" belongs to the previous entry.
      if (tok == "i" && !line.tokens.empty() && line.tokens.back().text.back() != 'i' &&
          (line.tokens.back().text.find_last_of("+-") != std::string::npos &&
           line.tokens.back().text.find_last_of("+-") > 0)) {
        line.tokens.back().text += 'i';
      } else {
        line.tokens.push_back({std::move(tok), i + 1});
      }
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

std::size_t header_value(const Token& t) {
  if (!all_digits(t.text) || t.text.size() > 9) return 0;
  return static_cast<std::size_t>(std::stoul(t.text));
}

}  // namespace

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& what)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
            describe(kind) + (what.empty() ? "" : ": " + what)),
      kind_(kind),
      line_(line),
      column_(column) {}

Scalar parse_scalar(std::string_view token) {
  if (token.empty()) throw std::invalid_argument("empty entry");
  if (token.back() != 'i') return Scalar(parse_rational(token, false));
  token.remove_suffix(1);
  // Split "re+im" at the last sign that does not lead the token.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = token.size(); k-- > 1;) {
    if (token[k] == '+' || token[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {mpq_class(0), parse_rational(token, true)};
  return {parse_rational(token.substr(0, split), false), parse_rational(token.substr(split), true)};
}

Matrix parse_matrix(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(ParseError::Kind::kEmpty, 1, 1, "no rows");

  // Optional "rows cols" header, accepted only when the body agrees with it.
  if (lines.size() > 1 && lines.front().tokens.size() == 2) {
    const std::size_t rows = header_value(lines.front().tokens[0]);
    const std::size_t cols = header_value(lines.front().tokens[1]);
    const bool consistent =
        rows > 0 && cols > 0 && lines.size() - 1 == rows &&
        std::all_of(lines.begin() + 1, lines.end(), [&](const Line& l) { return l.tokens.size() == cols; });
    if (consistent) lines.erase(lines.begin());
  }

  const std::size_t cols = lines.front().tokens.size();
  std::vector<Scalar> entries;
  entries.reserve(lines.size() * cols);
  for (const Line& line : lines) {
    if (line.tokens.size() != cols) {
      throw ParseError(ParseError::Kind::kRaggedRow, line.number, line.tokens.front().column,
                       "expected " + std::to_string(cols) + " entries, found " +
                           std::to_string(line.tokens.size()));
    }
    for (const Token& tok : line.tokens) {
      try {
        entries.push_back(parse_scalar(tok.text));
      } catch (const std::domain_error&) {
        throw ParseError(ParseError::Kind::kZeroDenominator, line.number, tok.column, tok.text);
      } catch (const std::invalid_argument&) {
        throw ParseError(ParseError::Kind::kSyntax, line.number, tok.column, "bad entry '" + tok.text + "'");
      }
    }
  }
  return {lines.size(), cols, std::move(entries)};
}

std::string serialize(const Matrix& m) {
  return std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n" + m.to_string();
}

std::string pretty(const Matrix& m, std::string_view indent) {
  mpz_class common = 1;
  for (const auto& v : m.entries()) {
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), v.re().get_den_mpz_t());
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), v.im().get_den_mpz_t());
  }
  const Scalar scale{mpq_class(common)};
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (const auto& v : m.entries()) {
    cells.push_back((v * scale).to_string());
    width = std::max(width, cells.back().size());
  }

  std::ostringstream out;
  if (common != 1) out << indent << "(1/" << common.get_str() << ") *\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << indent;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string& c = cells[i * m.cols() + j];
      out << std::string(width - c.size() + (j == 0 ? 0 : 1), ' ') << c;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ginv::cli
