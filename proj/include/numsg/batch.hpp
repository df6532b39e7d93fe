#pragma once

// Batch input: one semigroup per line as whitespace-separated decimal
// integers. '#' starts a comment; blank lines are skipped; LF or CRLF.

#include <charconv>
#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numsg/error.hpp"

namespace numsg {

struct BatchEntry {
  std::size_t line = 0;  // 1-based
  std::vector<Integer> generators;
  std::optional<std::string> error;  // "E_PARSE: ..." when the line is malformed

  bool operator==(const BatchEntry&) const = default;
};

inline std::optional<Integer> parse_decimal(std::string_view token) {
  if (token.empty()) return std::nullopt;
  for (char c : token)
    if (c < '0' || c > '9') return std::nullopt;
  Integer value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

inline std::optional<BatchEntry> parse_batch_line(std::string_view text, std::size_t line_no) {
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);

  BatchEntry entry;
  entry.line = line_no;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == '\t') {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
    const auto token = text.substr(pos, end - pos);
    if (auto v = parse_decimal(token)) {
      entry.generators.push_back(*v);
    } else {
      entry.error = "E_PARSE: line " + std::to_string(line_no) + ": bad token '" +
                    std::string(token) + "'";
      return entry;
    }
    pos = end;
  }
  if (entry.generators.empty()) return std::nullopt;
  return entry;
}

inline std::vector<BatchEntry> parse_batch(std::istream& in) {
  std::vector<BatchEntry> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto entry = parse_batch_line(line, line_no)) out.push_back(*std::move(entry));
  }
  return out;
}

}  // namespace numsg
