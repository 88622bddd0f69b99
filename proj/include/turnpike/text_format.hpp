#pragma once

#include <cctype>
#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "turnpike/distset.hpp"

namespace turnpike {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Whitespace-separated ASCII decimal integers, any order.
inline std::vector<Value> parse_values(std::string_view text) {
  std::vector<Value> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    const std::string_view token = text.substr(i, j - i);
    Value v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("not a non-negative decimal integer: '" + std::string(token) + "'");
    }
    out.push_back(v);
    i = j;
  }
  return out;
}

template <typename Set>
Set parse_set(std::string_view text) {
  return Set(parse_values(text));
}

template <typename Set>
Set read_set(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_set<Set>(text);
}

template <typename Range>
std::string format_values(const Range& values) {
  std::string out;
  bool first = true;
  for (Value v : values) {
    if (!first) out += ' ';
    out += std::to_string(v);
    first = false;
  }
  return out;
}

template <typename Tag>
std::string format_set(const OrderedSet<Tag>& s) {
  return format_values(s.values());
}

}  // namespace turnpike
