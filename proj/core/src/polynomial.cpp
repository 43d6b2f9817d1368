#include "crnt/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "crnt/error.hpp"

namespace crnt {

namespace {

using Exponents = Polynomial::Exponents;

Exponents merge(const Exponents& a, const Exponents& b) {
  Exponents out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

Rational rational_pow(const Rational& base, unsigned e) {
  Rational out = 1;
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

Polynomial Polynomial::variable(const std::string& name, unsigned exponent) {
  if (exponent == 0) return Polynomial(1);
  return monomial(1, Exponents{{name, exponent}});
}

Polynomial Polynomial::monomial(const Rational& coeff, Exponents exps) {
  std::sort(exps.begin(), exps.end());
  Exponents clean;
  for (auto& [s, e] : exps) {
    if (e == 0) continue;
    if (!clean.empty() && clean.back().first == s) clean.back().second += e;
    else clean.emplace_back(s, e);
  }
  Polynomial p;
  p.add_term(clean, coeff);
  return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Rational Polynomial::constant_value() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<std::string> Polynomial::symbols() const {
  std::set<std::string> out;
  for (const auto& [e, c] : terms_)
    for (const auto& [s, k] : e) out.insert(s);
  return out;
}

unsigned Polynomial::degree_in(const std::string& sym) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_)
    for (const auto& [s, k] : e)
      if (s == sym) d = std::max(d, k);
  return d;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned t = 0;
    for (const auto& [s, k] : e) t += k;
    d = std::max(d, t);
  }
  return d;
}

std::vector<Polynomial> Polynomial::coefficients_in(const std::string& sym) const {
  std::vector<Polynomial> out(degree_in(sym) + 1);
  for (const auto& [e, c] : terms_) {
    unsigned d = 0;
    Exponents rest;
    for (const auto& p : e) {
      if (p.first == sym) d = p.second;
      else rest.push_back(p);
    }
    out[d].add_term(rest, c);
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(merge(ea, eb), ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1), base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

Rational Polynomial::eval(const std::map<std::string, Rational>& values) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (const auto& [s, k] : e) {
      auto it = values.find(s);
      if (it == values.end()) throw ValidationError("no value for symbol '" + s + "'");
      t *= rational_pow(it->second, k);
    }
    sum += t;
  }
  return sum;
}

double Polynomial::eval_double(const std::map<std::string, double>& values) const {
  double sum = 0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (const auto& [s, k] : e) {
      auto it = values.find(s);
      if (it == values.end()) throw ValidationError("no value for symbol '" + s + "'");
      t *= std::pow(it->second, static_cast<int>(k));
    }
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& values) const {
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    Polynomial t(c);
    Exponents kept;
    for (const auto& [s, k] : e) {
      auto it = values.find(s);
      if (it == values.end()) kept.emplace_back(s, k);
      else t *= it->second.pow(k);
    }
    out += t * monomial(1, kept);
  }
  return out;
}

Polynomial Polynomial::rename(const std::map<std::string, std::string>& names) const {
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    Exponents r;
    for (const auto& [s, k] : e) {
      auto it = names.find(s);
      r.emplace_back(it == names.end() ? s : it->second, k);
    }
    out += monomial(c, r);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool wrote = false;
    if (e.empty() || a != 1) {
      os << a.get_str();
      wrote = true;
    }
    for (const auto& [s, k] : e) {
      if (wrote) os << "*";
      os << s;
      if (k != 1) os << "^" << k;
      wrote = true;
    }
    first = false;
  }
  return os.str();
}

// Division and gcd -----------------------------------------------------------

namespace {

std::string main_symbol(const Polynomial& a, const Polynomial& b) {
  auto sa = a.symbols(), sb = b.symbols();
  sa.insert(sb.begin(), sb.end());
  return sa.empty() ? std::string{} : *sa.begin();
}

Polynomial leading_coeff(const Polynomial& p, const std::string& v) { return p.coefficients_in(v).back(); }

Polynomial shift_up(const Polynomial& p, const std::string& v, unsigned d) {
  return d == 0 ? p : p * Polynomial::variable(v, d);
}

// Integer coprime coefficients, first term positive.
Polynomial normalize(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer l = 1, g = 0;
  for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [e, c] : p.terms()) {
    Rational t = c * l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_num_mpz_t());
  }
  Rational f(l, g);
  f.canonicalize();
  if (p.terms().begin()->second < 0) f = -f;
  return p * Polynomial(f);
}

// Pseudo-remainder of a by b with respect to v.
Polynomial prem(Polynomial a, const Polynomial& b, const std::string& v) {
  const unsigned db = b.degree_in(v);
  const Polynomial lb = leading_coeff(b, v);
  while (!a.is_zero() && a.degree_in(v) >= db) {
    const unsigned da = a.degree_in(v);
    Polynomial la = leading_coeff(a, v);
    a = lb * a - shift_up(la * b, v, da - db);
  }
  return a;
}

Polynomial content_in(const Polynomial& p, const std::string& v) {
  Polynomial g;
  for (const auto& c : p.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? normalize(c) : gcd(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

}  // namespace

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ValidationError("division by the zero polynomial");
  if (a.is_zero()) return Polynomial();
  if (b.is_constant()) return a * Polynomial(Rational(1) / b.constant_value());
  const std::string v = *b.symbols().begin();
  const unsigned db = b.degree_in(v);
  const Polynomial lb = leading_coeff(b, v);
  Polynomial q, r = a;
  while (!r.is_zero()) {
    const unsigned dr = r.degree_in(v);
    if (dr < db) return std::nullopt;
    auto t = divide_exact(leading_coeff(r, v), lb);
    if (!t) return std::nullopt;
    Polynomial term = shift_up(*t, v, dr - db);
    q += term;
    r -= term * b;
  }
  return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  const std::string v = main_symbol(a, b);
  if (a.degree_in(v) == 0) return gcd(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd(content_in(a, v), b);

  Polynomial ca = content_in(a, v), cb = content_in(b, v);
  Polynomial pa = *divide_exact(a, ca), pb = *divide_exact(b, cb);
  Polynomial g = gcd(ca, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  for (;;) {
    Polynomial r = prem(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      pb = Polynomial(1);
      break;
    }
    pa = pb;
    pb = *divide_exact(r, content_in(r, v));
  }
  if (!pb.is_constant()) pb = *divide_exact(pb, content_in(pb, v));
  return normalize(g * pb);
}

std::pair<Polynomial, Polynomial> simplify_ratio(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw ValidationError("zero denominator");
  if (num.is_zero()) return {Polynomial(), Polynomial(1)};
  Polynomial g = gcd(num, den);
  Polynomial n = *divide_exact(num, g);
  Polynomial d = *divide_exact(den, g);
  Polynomial dn = normalize(d);
  // d = f * dn for a rational f; move f to the numerator.
  Rational f = d.terms().begin()->second / dn.terms().begin()->second;
  return {n * Polynomial(Rational(1) / f), dn};
}

std::pair<Polynomial, Polynomial> PowerProduct::as_fraction() const {
  Polynomial n(1), d(1);
  for (const auto& f : factors) {
    if (!is_integral(f.exponent)) throw UnsupportedError("fractional exponent in power product");
    const long e = f.exponent.get_num().get_si();
    if (e >= 0) {
      n *= f.num.pow(static_cast<unsigned>(e));
      d *= f.den.pow(static_cast<unsigned>(e));
    } else {
      n *= f.den.pow(static_cast<unsigned>(-e));
      d *= f.num.pow(static_cast<unsigned>(-e));
    }
  }
  return {n, d};
}

bool PowerProduct::has_integer_exponents() const {
  return std::all_of(factors.begin(), factors.end(), [](const Factor& f) { return is_integral(f.exponent); });
}

std::string PowerProduct::to_string() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << " * ";
    os << "((" << factors[i].num.to_string() << ")/(" << factors[i].den.to_string() << "))";
    if (factors[i].exponent != 1) os << "^(" << factors[i].exponent.get_str() << ")";
  }
  return os.str();
}

bool power_product_independent_of(const PowerProduct& p, const std::set<std::string>& vars) {
  // Raise to the common denominator D of the exponents; the D-th power is a
  // rational function N/M, and independence of P equals independence of P^D
  // because P is positive on the positive orthant.
  Integer D = 1;
  for (const auto& f : p.factors) {
    if (f.num.is_zero() || f.den.is_zero()) throw ValidationError("power product with a zero base");
    mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), f.exponent.get_den_mpz_t());
  }
  PowerProduct raised;
  for (const auto& f : p.factors) raised.factors.push_back({f.num, f.den, f.exponent * D});
  auto [n, m] = raised.as_fraction();

  std::set<std::string> all = n.symbols();
  for (const auto& s : m.symbols()) all.insert(s);
  std::map<std::string, std::string> fresh;
  for (const auto& v : vars) {
    if (!all.count(v)) continue;
    std::string name = v + "'";
    while (all.count(name)) name += "'";
    fresh[v] = name;
  }
  if (fresh.empty()) return true;
  // N(v) M(v') == N(v') M(v)
  return (n * m.rename(fresh) - n.rename(fresh) * m).is_zero();
}

double evaluate(const PowerProduct& p, const std::map<std::string, double>& values) {
  double out = 1;
  for (const auto& f : p.factors)
    out *= std::pow(f.num.eval_double(values) / f.den.eval_double(values), f.exponent.get_d());
  return out;
}

}  // namespace crnt
