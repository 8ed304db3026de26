#include "ricopoly/rational.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "ricopoly/errors.hpp"

namespace ricopoly {

namespace {

std::string strip(const std::string& s) {
  auto b = s.begin();
  auto e = s.end();
  while (b != e && std::isspace(static_cast<unsigned char>(*b))) ++b;
  while (e != b && std::isspace(static_cast<unsigned char>(*(e - 1)))) --e;
  return std::string(b, e);
}

// "ddd.dddEsxx" -> exact rational.  The mantissa digits become an integer
// scaled by the appropriate power of ten.
Rational parse_decimal(const std::string& text) {
  std::string s = text;
  long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    exp10 = std::strtol(s.c_str() + epos + 1, nullptr, 10);
    s = s.substr(0, epos);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<long>(s.size() - dot - 1);
    s.erase(dot, 1);
  }
  if (s.empty() || s == "-" || s == "+") throw UsageError("bad rational literal: '" + text + "'");
  for (size_t i = 0; i < s.size(); ++i) {
    if (!(std::isdigit(static_cast<unsigned char>(s[i])) || (i == 0 && (s[i] == '-' || s[i] == '+'))))
      throw UsageError("bad rational literal: '" + text + "'");
  }
  Rational r(mpz_class(s, 10));
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  if (exp10 >= 0)
    r *= pow10;
  else
    r /= Rational(pow10);
  r.canonicalize();
  return r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::string s = strip(text);
  if (s.empty()) throw UsageError("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational num = parse_decimal(strip(s.substr(0, slash)));
    Rational den = parse_decimal(strip(s.substr(slash + 1)));
    if (den == 0) throw UsageError("zero denominator in '" + text + "'");
    Rational r = num / den;
    r.canonicalize();
    return r;
  }
  return parse_decimal(s);
}

std::string rational_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string double_string(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace ricopoly
