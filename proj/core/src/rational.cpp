#include "crnt/rational.hpp"

#include <cctype>
#include <limits>

#include "crnt/error.hpp"

namespace crnt {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(line == 0 ? message
                      : "line " + std::to_string(line) + ", column " + std::to_string(column) +
                            ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw ParseError(0, 0, "not a number: '" + std::string(text) + "'"); };
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  std::size_t end = text.size();
  while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view s = text.substr(pos, end - pos);
  if (s.empty()) fail();

  bool negative = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') {
    negative = s[i] == '-';
    ++i;
  }

  auto read_digits = [&](std::string& out) {
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out.push_back(s[i++]);
  };

  std::string whole, frac;
  read_digits(whole);

  // p/q form
  if (i < s.size() && s[i] == '/') {
    ++i;
    std::string den;
    read_digits(den);
    if (whole.empty() || den.empty() || i != s.size()) fail();
    Integer d(den);
    if (d == 0) throw ParseError(0, 0, "zero denominator in '" + std::string(text) + "'");
    Rational q(Integer(whole), d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }

  if (i < s.size() && s[i] == '.') {
    ++i;
    read_digits(frac);
  }
  if (whole.empty() && frac.empty()) fail();

  long exponent = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      eneg = s[i] == '-';
      ++i;
    }
    std::string edigits;
    read_digits(edigits);
    if (edigits.empty() || edigits.size() > 6) fail();
    exponent = std::stol(edigits);
    if (eneg) exponent = -exponent;
  }
  if (i != s.size()) fail();

  Integer num(whole.empty() ? "0" : whole);
  if (!frac.empty()) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    num = num * scale + Integer(frac);
    exponent -= static_cast<long>(frac.size());
  }
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational q = exponent < 0 ? Rational(num, p) : Rational(num * p);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

RatVec to_rational(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

std::vector<double> to_double(const RatVec& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_d());
  return out;
}

IntVec to_int(const RatVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (x.get_den() != 1) throw ValidationError("fractional entry " + x.get_str());
    if (!x.get_num().fits_slong_p()) throw ValidationError("integer overflow on " + x.get_str());
    out.push_back(x.get_num().get_si());
  }
  return out;
}

bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

}  // namespace crnt
