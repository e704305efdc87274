#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "nestlab/error.hpp"

namespace nestlab {

// gmpxx keeps every mpq_class result canonical (reduced, positive denominator).
using Rational = mpq_class;

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p", "-p" or "p/q" with q > 0. Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
  auto bad = [&] { return ParseError("malformed rational \"" + std::string(text) + "\""); };
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
  if (digits == 0) throw bad();
  if (i < text.size()) {
    if (text[i] != '/') throw bad();
    ++i;
    digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
    if (digits == 0 || i != text.size()) throw bad();
  }
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw bad();
  if (r.get_den() == 0) throw ParseError("zero denominator in \"" + s + "\"");
  r.canonicalize();
  return r;
}

}  // namespace nestlab
