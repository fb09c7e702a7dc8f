#include "mathieu/format.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace mathieu {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

// Parses a signed decimal starting at pos; returns value and advances pos.
// An empty mantissa before 'i' (as in "i", "-i", "+i") counts as 1.
bool parse_signed(const std::string& s, size_t& pos, double& out, bool& bare_unit) {
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  size_t digits_start = pos;
  while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) ||
                            s[pos] == '.')) {
    ++pos;
  }
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    size_t e = pos + 1;
    if (e < s.size() && (s[e] == '+' || s[e] == '-')) ++e;
    size_t exp_digits = e;
    while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
    if (e > exp_digits) pos = e;
  }
  bare_unit = (pos == digits_start);
  if (bare_unit) {
    out = (start < s.size() && s[start] == '-') ? -1.0 : 1.0;
    return pos > start || pos < s.size();  // something must follow (the 'i')
  }
  out = std::strtod(s.substr(start, pos - start).c_str(), nullptr);
  return true;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) fail(ErrorKind::domain, "parse_complex: empty literal");

  size_t pos = 0;
  double first = 0.0;
  bool bare = false;
  if (!parse_signed(s, pos, first, bare)) {
    fail(ErrorKind::domain, "parse_complex: cannot parse '" + text + "'");
  }

  if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'j')) {
    // Pure imaginary: "2i", "i", "-i"
    ++pos;
    if (pos != s.size()) {
      fail(ErrorKind::domain, "parse_complex: trailing characters in '" + text + "'");
    }
    return Complex(0.0, first);
  }
  if (bare) fail(ErrorKind::domain, "parse_complex: cannot parse '" + text + "'");
  if (pos == s.size()) return Complex(first, 0.0);

  double second = 0.0;
  bool bare2 = false;
  if ((s[pos] != '+' && s[pos] != '-') || !parse_signed(s, pos, second, bare2) ||
      pos >= s.size() || (s[pos] != 'i' && s[pos] != 'j') || pos + 1 != s.size()) {
    fail(ErrorKind::domain, "parse_complex: cannot parse '" + text + "'");
  }
  return Complex(first, second);
}

}  // namespace mathieu
