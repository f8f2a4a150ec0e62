#pragma once

// Shared tokenizer for the line-oriented input formats.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "hyperbolic/error.hpp"

namespace hyperbolic::detail {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

struct Line {
  int number;      // 1-based
  bool indented;   // starts with whitespace
  std::vector<Token> tokens;
};

/// Splits text into non-blank lines with '#' comments removed.
inline std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, !raw.empty() && (raw[0] == ' ' || raw[0] == '\t'), {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      if (i >= raw.size()) break;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      line.tokens.push_back({raw.substr(start, i - start), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

inline int parse_int(const Line& line, std::size_t index, std::string_view what) {
  if (index >= line.tokens.size())
    throw ParseError(line.number, 0, "missing " + std::string(what));
  const Token& tok = line.tokens[index];
  int value = 0;
  const auto* first = tok.text.data();
  const auto* last = first + tok.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(line.number, tok.column,
                     "expected integer " + std::string(what) + ", got '" + std::string(tok.text) + "'");
  return value;
}

inline void expect_count(const Line& line, std::size_t count, std::string_view usage) {
  if (line.tokens.size() < count)
    throw ParseError(line.number, 0, "too few fields; expected '" + std::string(usage) + "'");
  if (line.tokens.size() > count)
    throw ParseError(line.number, line.tokens[count].column,
                     "unexpected field '" + std::string(line.tokens[count].text) + "'; expected '" +
                         std::string(usage) + "'");
}

}  // namespace hyperbolic::detail
