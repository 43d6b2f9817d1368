#ifndef CRNT_POLYNOMIAL_HPP
#define CRNT_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "crnt/rational.hpp"

namespace crnt {

/// Sparse multivariate polynomial over Q in named symbols.
class Polynomial {
 public:
  /// Sorted by symbol name; exponents are positive.
  using Exponents = std::vector<std::pair<std::string, unsigned>>;
  using Terms = std::map<Exponents, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  Polynomial(long c) : Polynomial(Rational(c)) {}
  static Polynomial variable(const std::string& name, unsigned exponent = 1);
  static Polynomial monomial(const Rational& coeff, Exponents exps);

  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  ///< constant term
  std::set<std::string> symbols() const;
  unsigned degree_in(const std::string& sym) const;
  unsigned total_degree() const;

  /// Coefficients c_d (free of sym) with p = sum_d c_d sym^d.
  std::vector<Polynomial> coefficients_in(const std::string& sym) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial pow(unsigned e) const;

  /// Exact evaluation; every symbol must be bound.
  Rational eval(const std::map<std::string, Rational>& values) const;
  double eval_double(const std::map<std::string, double>& values) const;
  /// Replaces the given symbols by polynomials; others stay symbolic.
  Polynomial substitute(const std::map<std::string, Polynomial>& values) const;
  Polynomial rename(const std::map<std::string, std::string>& names) const;

  /// "k1m*k3p*k4 + k2*k3p*k4"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  Terms terms_;
};

/// a / b when b divides a exactly, otherwise nullopt.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Greatest common divisor, normalized to integer coprime coefficients with a
/// positive leading term.  Used for display simplification only.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Cancels the common factor of num/den.  The denominator comes back with
/// coprime integer coefficients and a positive leading term.
std::pair<Polynomial, Polynomial> simplify_ratio(const Polynomial& num, const Polynomial& den);

/// prod_j (num_j / den_j)^{exponent_j}
struct PowerProduct {
  struct Factor {
    Polynomial num;
    Polynomial den;
    Rational exponent;
  };
  std::vector<Factor> factors;

  /// Integer exponents only: the product as a single fraction.
  std::pair<Polynomial, Polynomial> as_fraction() const;
  bool has_integer_exponents() const;
  std::string to_string() const;
};

/// True when the power product is constant in every symbol of `vars`.  Exact:
/// after raising to the common denominator D of the exponents,
/// P(k, v) = P(k, v') is checked as a polynomial identity in fresh copies v'.
bool power_product_independent_of(const PowerProduct& p, const std::set<std::string>& vars);

/// Numeric value of the power product (exponents may be fractional).
double evaluate(const PowerProduct& p, const std::map<std::string, double>& values);

}  // namespace crnt

#endif
