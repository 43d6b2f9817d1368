#include <functional>
#include <optional>

#include "crnt/error.hpp"
#include "crnt/lp.hpp"
#include "crnt/steady_state.hpp"

namespace crnt {

namespace {

// A vector of the subspace whose first `assigned` signs match, if one exists.
// Variables: lambda+ (k), lambda- (k), one slack per nonzero sign; v_i > 0 is
// encoded as v_i >= 1, which loses nothing because the solution set is a cone.
std::optional<RatVec> realize_prefix(const SubspaceBasis& space, const std::vector<std::int8_t>& signs,
                                     std::size_t assigned) {
  const std::size_t k = space.dim();
  const auto& b = space.vectors();
  if (k == 0) {
    for (std::size_t i = 0; i < assigned; ++i)
      if (signs[i] != 0) return std::nullopt;
    return RatVec(space.ambient_dim(), Rational(0));
  }
  std::size_t slacks = 0;
  for (std::size_t i = 0; i < assigned; ++i) slacks += signs[i] != 0;
  RationalMatrix a(assigned, 2 * k + slacks);
  RatVec rhs(assigned, Rational(0));
  std::size_t s = 0;
  for (std::size_t i = 0; i < assigned; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      a(i, j) = b[j][i];
      a(i, k + j) = -b[j][i];
    }
    if (signs[i] > 0) {
      a(i, 2 * k + s++) = -1;
      rhs[i] = 1;
    } else if (signs[i] < 0) {
      a(i, 2 * k + s++) = 1;
      rhs[i] = -1;
    }
  }
  auto sol = find_nonnegative_solution(a, rhs);
  if (!sol) return std::nullopt;
  RatVec v(space.ambient_dim(), Rational(0));
  for (std::size_t j = 0; j < k; ++j) {
    Rational c = (*sol)[j] - (*sol)[k + j];
    if (c == 0) continue;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[j][i];
  }
  return v;
}

}  // namespace

std::string SignVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ",";
    s += entries[i] > 0 ? "+" : entries[i] < 0 ? "-" : "0";
  }
  return s + ")";
}

SignVector SignVector::of(const RatVec& v) {
  SignVector out;
  for (const auto& x : v) out.entries.push_back(static_cast<std::int8_t>(sgn(x)));
  return out;
}

SignVector SignVector::parse(std::string_view text) {
  SignVector out;
  for (char c : text) {
    if (c == '+') out.entries.push_back(1);
    else if (c == '-') out.entries.push_back(-1);
    else if (c == '0') out.entries.push_back(0);
    else if (c == '(' || c == ')' || c == ',' || c == ' ') continue;
    else throw ParseError(0, 0, "invalid sign character '" + std::string(1, c) + "'");
  }
  return out;
}

bool sign_pattern_feasible(const SubspaceBasis& space, const SignVector& pattern) {
  if (pattern.entries.size() != space.ambient_dim()) throw DimensionError("sign pattern has wrong length");
  return realize_prefix(space, pattern.entries, pattern.entries.size()).has_value();
}

std::set<SignVector> sign_vectors(const SubspaceBasis& space, std::size_t dim_cap) {
  const std::size_t m = space.ambient_dim();
  if (m > dim_cap)
    throw CapExceeded("sign vector enumeration in dimension " + std::to_string(m) + " exceeds the cap of " +
                      std::to_string(dim_cap));
  std::vector<bool> always_zero(m, true);
  for (const auto& v : space.vectors())
    for (std::size_t i = 0; i < m; ++i)
      if (v[i] != 0) always_zero[i] = false;

  // Only patterns whose first nonzero entry is + are searched; the set is
  // closed under negation.  A child whose sign agrees with the parent's
  // witness needs no LP.
  std::set<SignVector> out;
  std::vector<std::int8_t> signs(m, 0);
  std::function<void(std::size_t, bool, const RatVec&)> dfs = [&](std::size_t i, bool nonzero_seen,
                                                                  const RatVec& witness) {
    if (i == m) {
      out.insert(SignVector{signs});
      return;
    }
    for (std::int8_t s : {std::int8_t{0}, std::int8_t{1}, std::int8_t{-1}}) {
      if (s != 0 && always_zero[i]) continue;
      if (s < 0 && !nonzero_seen) continue;
      signs[i] = s;
      if (sgn(witness[i]) == s) {
        dfs(i + 1, nonzero_seen || s != 0, witness);
      } else if (auto w = realize_prefix(space, signs, i + 1)) {
        dfs(i + 1, nonzero_seen || s != 0, *w);
      }
    }
    signs[i] = 0;
  };
  dfs(0, false, RatVec(m, Rational(0)));
  std::vector<SignVector> positive(out.begin(), out.end());
  for (auto v : positive) {
    for (auto& e : v.entries) e = static_cast<std::int8_t>(-e);
    out.insert(std::move(v));
  }
  return out;
}

}  // namespace crnt
