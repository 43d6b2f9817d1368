#ifndef CRNT_RATIONAL_HPP
#define CRNT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace crnt {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVec = std::vector<std::int64_t>;
using RatVec = std::vector<Rational>;

/// Accepts "3", "-2/5", "0.125", "1e-3", "2.5E+2".  Decimal input is converted
/// exactly (0.1 becomes 1/10).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
double to_double(const Rational& q);

RatVec to_rational(const IntVec& v);
std::vector<double> to_double(const RatVec& v);

/// Converts an integral rational vector back to machine integers; throws if an
/// entry is fractional or does not fit.
IntVec to_int(const RatVec& v);

bool is_zero(const RatVec& v);
bool is_integral(const Rational& q);

}  // namespace crnt

#endif
