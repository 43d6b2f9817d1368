#ifndef CRNT_STEADY_STATE_HPP
#define CRNT_STEADY_STATE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "crnt/linalg.hpp"
#include "crnt/model.hpp"
#include "crnt/polynomial.hpp"
#include "crnt/translation.hpp"

namespace crnt {

/// coeff_pos * x^expon_pos - coeff_neg * x^expon_neg.  For the binomial of
/// translated complex j anchored at a in the same class, coeff_pos = K_a,
/// expon_pos = kinetic complex of j, coeff_neg = K_j, expon_neg = kinetic
/// complex of a.
struct Binomial {
  Polynomial coeff_pos;
  IntVec expon_pos;
  Polynomial coeff_neg;
  IntVec expon_neg;
  std::size_t anchor = 0;   ///< translated complex
  std::size_t partner = 0;  ///< translated complex

  std::string to_string(const Network& net) const;
  /// Relative residual |pos - neg| / max(|pos|, |neg|) at x (numeric coefficients).
  double relative_residual(std::span<const double> x) const;
};

struct BinomialOptions {
  /// Linkage class index (of the translated network) -> anchor complex.
  std::map<std::size_t, std::size_t> anchors;
};

/// Generators of the steady-state ideal with symbolic coefficients.  Requires
/// a strong translation with zero deficiency and zero kinetic deficiency
/// (HypothesisError otherwise).
std::vector<Binomial> binomial_generators(const Translation& t, const BinomialOptions& options = {});
/// Same with coefficients evaluated exactly at the given source rates.
std::vector<Binomial> binomial_generators(const Translation& t, const RateMap& rates,
                                          const BinomialOptions& options = {});

/// Checks the zero-deficiency hypotheses and throws HypothesisError when they fail.
void require_deficiency_zero(const Translation& t);

struct Parametrization {
  SubspaceBasis stoichiometric;   ///< S
  SubspaceBasis kinetic_order;    ///< S~ (kinetic complexes of CR_K)
  SubspaceBasis kinetic_orthogonal;  ///< S~^perp, the exponent directions
  std::size_t dimension = 0;      ///< dim S~^perp
};

Parametrization parametrization(const Translation& t);

/// One positive steady state per rate choice: the positive solution of the
/// binomials closest to 1, x* = exp(L) with L the minimal-norm solution of
/// the log-linear system.
std::vector<double> particular_steady_state(const Translation& t, const RateMap& rates);

// Sign vectors --------------------------------------------------------------

struct SignVector {
  std::vector<std::int8_t> entries;  ///< -1, 0, +1
  auto operator<=>(const SignVector&) const = default;
  std::string to_string() const;  ///< "(0,+,-,+,0,0)"
  static SignVector of(const RatVec& v);
  static SignVector parse(std::string_view text);
};

/// All sign vectors of a subspace, by depth-first search over coordinates with
/// an exact LP feasibility check at each node.  CapExceeded above dim_cap.
std::set<SignVector> sign_vectors(const SubspaceBasis& space, std::size_t dim_cap = 12);

/// Is there a vector of the subspace with exactly this sign pattern?
bool sign_pattern_feasible(const SubspaceBasis& space, const SignVector& pattern);

struct UniquenessCheck {
  bool sign_compatible = false;       ///< sigma(S) == sigma(S~)
  bool positive_conservation = false; ///< (+,...,+) in sigma(S^perp)
  std::optional<SignVector> witness;  ///< in one sign set but not the other
  bool holds() const { return sign_compatible && positive_conservation; }
};

/// Sufficient condition for exactly one positive steady state per
/// compatibility class.
UniquenessCheck check_uniqueness_condition(const Translation& t, std::size_t dim_cap = 12);

struct MultistationarityCheck {
  bool holds = false;                 ///< sigma(S) and sigma(S~^perp) share a nonzero vector
  std::optional<SignVector> witness;
};

MultistationarityCheck check_multistationarity_condition(const Translation& t, std::size_t dim_cap = 12);

// Numerics ------------------------------------------------------------------

struct NewtonOptions {
  std::size_t max_iterations = 80;
  std::size_t max_halvings = 30;
  double tolerance = 1e-12;
  /// Largest change of any ln x_s in a single step.
  double max_log_step = 2.0;
  /// Extra attempts from x0 scaled by exp(U(-1,1)) per species when a run fails.
  std::size_t restarts = 8;
  std::uint64_t seed = 0;
  /// Starting point; empty means start at x0.  Conservation targets always come from x0.
  std::vector<double> start;
};

enum class SolveStatus { Converged, MaxIterations, SingularJacobian };
std::string to_string(SolveStatus s);

struct SolveResult {
  std::vector<double> x;
  SolveStatus status = SolveStatus::MaxIterations;
  std::size_t iterations = 0;  ///< of the last attempt
  std::size_t restarts = 0;    ///< fallback attempts used; continuation counts as the first
  double residual = 0;  ///< max-norm of the scaled system at x
  bool converged() const { return status == SolveStatus::Converged; }
};

/// Positive steady state in the compatibility class of x0: binomials (in log
/// form) together with the conservation laws w . x = w . x0, solved by damped
/// Newton iteration.  On failure it continues from the particular solution x*
/// along the binomial variety, then tries seeded random restarts.
SolveResult solve_steady_state(const Translation& t, const RateMap& rates, std::span<const double> x0,
                               const NewtonOptions& options = {});

struct VerificationReport {
  double residual = 0;           ///< max-norm of the mass-action vector field
  double relative_residual = 0;  ///< residual over the max-norm of |Gamma| R(x)
  std::vector<double> field;     ///< dx/dt per species
  bool decomposes = false;       ///< R(x) is a nonnegative combination of extreme currents
  std::vector<double> current_weights;
  double decomposition_residual = 0;  ///< relative
};

VerificationReport verify_steady_state(const Network& net, const RateMap& rates, std::span<const double> x);

/// A_k Psi~(x) == 0 (exact) for a generalized network.
bool check_complex_balanced(const GeneralizedNetwork& net, const RateMap& rates, std::span<const Rational> x);
/// Relative max-norm of A_k Psi~(x), compared with `tolerance`.
bool check_complex_balanced(const GeneralizedNetwork& net, const RateMap& rates, std::span<const double> x,
                            double tolerance = 1e-9);

/// Nonnegative least squares min ||A w - b||, w >= 0 (Lawson-Hanson).
std::vector<double> nonnegative_least_squares(const std::vector<std::vector<double>>& columns,
                                              const std::vector<double>& b);

}  // namespace crnt

#endif
