#pragma once

// Line-oriented text format for finite semirings:
//
//   algebra t3
//   elements: 0 a 1
//   zero: 0
//   one: 1
//   add:
//   0 a 1
//   a a a
//   1 a a
//   mul:
//   0 0 0
//   0 a a
//   0 a 1
//
// Row i, column j of a table holds e_i op e_j.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "vsemi/finite_algebra.hpp"

namespace vsemi {

class AlgebraFormatError : public AlgebraError {
 public:
  AlgebraFormatError(std::size_t line, const std::string& what)
      : AlgebraError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

inline std::string write_algebra(const FiniteSemiring& a) {
  std::string out = "algebra " + a.name() + "\nelements:";
  for (const auto& l : a.labels()) out += " " + l;
  out += "\nzero: " + a.label(a.zero()) + "\none: " + a.label(a.one()) + "\n";
  const auto n = static_cast<Element>(a.size());
  auto table = [&](const char* header, auto op) {
    out += header;
    out += '\n';
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        if (j) out += ' ';
        out += a.label(op(i, j));
      }
      out += '\n';
    }
  };
  table("add:", [&](Element x, Element y) { return a.add(x, y); });
  table("mul:", [&](Element x, Element y) { return a.mul(x, y); });
  return out;
}

namespace detail {

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace detail

/// Parses the text format. Errors name the 1-based offending line.
inline FiniteSemiring parse_algebra(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(std::move(line));
    }
  }
  // Trailing blank lines are tolerated; nothing else is optional.
  while (!lines.empty() && detail::split_ws(lines.back()).empty()) lines.pop_back();

  std::size_t cursor = 0;
  auto next = [&](const char* expected) -> std::vector<std::string> {
    if (cursor >= lines.size())
      throw AlgebraFormatError(cursor + 1, std::string("unexpected end of file, expected ") + expected);
    return detail::split_ws(lines[cursor++]);
  };
  auto keyed = [&](const char* key, std::size_t min_values) {
    auto toks = next(key);
    if (toks.empty() || toks[0] != key)
      throw AlgebraFormatError(cursor, std::string("expected '") + key + "'");
    if (toks.size() - 1 < min_values)
      throw AlgebraFormatError(cursor, std::string("missing value after '") + key + "'");
    toks.erase(toks.begin());
    return toks;
  };

  auto header = keyed("algebra", 1);
  if (header.size() != 1) throw AlgebraFormatError(cursor, "algebra name must be a single token");
  auto labels = keyed("elements:", 1);
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (labels[i] == labels[j]) throw AlgebraFormatError(cursor, "duplicate element '" + labels[i] + "'");
  const std::size_t n = labels.size();

  auto lookup = [&](const std::string& label) -> Element {
    for (std::size_t i = 0; i < n; ++i)
      if (labels[i] == label) return static_cast<Element>(i);
    throw AlgebraFormatError(cursor, "unknown element '" + label + "'");
  };
  auto constant = [&](const char* key) {
    auto v = keyed(key, 1);
    if (v.size() != 1) throw AlgebraFormatError(cursor, std::string("'") + key + "' takes one element");
    return lookup(v[0]);
  };
  const Element zero = constant("zero:");
  const Element one = constant("one:");

  auto table = [&](const char* key) {
    if (!keyed(key, 0).empty())
      throw AlgebraFormatError(cursor, std::string("table rows must start on the line after '") + key + "'");
    std::vector<Element> cells;
    cells.reserve(n * n);
    for (std::size_t row = 0; row < n; ++row) {
      auto toks = next("table row");
      if (toks.size() != n)
        throw AlgebraFormatError(cursor, "expected " + std::to_string(n) + " entries, found " +
                                             std::to_string(toks.size()));
      for (const auto& t : toks) cells.push_back(lookup(t));
    }
    return cells;
  };
  auto add = table("add:");
  auto mul = table("mul:");
  if (cursor != lines.size()) throw AlgebraFormatError(cursor + 1, "unexpected trailing content");

  return FiniteSemiring(header[0], std::move(labels), std::move(add), std::move(mul), zero, one);
}

inline FiniteSemiring read_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw AlgebraError("cannot open algebra file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

}  // namespace vsemi
