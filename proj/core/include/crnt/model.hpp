#ifndef CRNT_MODEL_HPP
#define CRNT_MODEL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crnt/matrix.hpp"
#include "crnt/rational.hpp"

namespace crnt {

struct Species {
  std::string name;
  std::size_t index = 0;
};

/// Nonnegative integer combination of species.
class Complex {
 public:
  Complex() = default;
  explicit Complex(IntVec coeffs);
  static Complex zero(std::size_t species_count) { return Complex(IntVec(species_count, 0)); }

  const IntVec& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const;

  auto operator<=>(const Complex&) const = default;

 private:
  IntVec coeffs_;
};

struct Reaction {
  std::size_t reactant = 0;
  std::size_t product = 0;
  std::string rate;  ///< rate-constant symbol, unique within a network
};

/// Rate symbol -> value.
using RateMap = std::map<std::string, Rational>;

class Network {
 public:
  Network() = default;
  /// Validates everything: distinct species names, distinct complexes, no
  /// self-reactions, unique rate symbols, every complex used by a reaction,
  /// and (unless disabled) every species present in some complex.
  Network(std::vector<std::string> species, std::vector<Complex> complexes,
          std::vector<Reaction> reactions, std::string name = {},
          bool require_species_usage = true);

  const std::string& name() const noexcept { return name_; }
  std::size_t species_count() const noexcept { return species_.size(); }
  std::size_t complex_count() const noexcept { return complexes_.size(); }
  std::size_t reaction_count() const noexcept { return reactions_.size(); }

  const std::vector<Species>& species() const noexcept { return species_; }
  std::vector<std::string> species_names() const;
  const std::vector<Complex>& complexes() const noexcept { return complexes_; }
  const Complex& complex(std::size_t i) const { return complexes_.at(i); }
  const std::vector<Reaction>& reactions() const noexcept { return reactions_; }
  const Reaction& reaction(std::size_t i) const { return reactions_.at(i); }

  /// y_product - y_reactant
  IntVec reaction_vector(std::size_t i) const;
  /// Indices of complexes that are the reactant of at least one reaction.
  std::vector<std::size_t> reactant_complexes() const;
  bool is_reactant(std::size_t complex) const;

  std::optional<std::size_t> find_complex(const Complex& c) const;
  std::optional<std::size_t> find_species(std::string_view name) const;
  std::optional<std::size_t> find_reaction(std::string_view rate) const;

  /// "S + 2 E", or "0" for the zero complex.
  std::string format(const Complex& c) const;
  std::string format(const IntVec& v, bool signed_terms = false) const;
  std::string format_reaction(std::size_t i) const;

 private:
  std::string name_;
  std::vector<Species> species_;
  std::vector<Complex> complexes_;
  std::vector<Reaction> reactions_;
};

/// A network together with kinetic complexes.  Entry j may be empty for a
/// complex that is never a reactant and was not assigned one.
class GeneralizedNetwork {
 public:
  GeneralizedNetwork() = default;
  /// Mass action: every kinetic complex equals its stoichiometric complex.
  explicit GeneralizedNetwork(Network base);
  GeneralizedNetwork(Network base, std::vector<std::optional<Complex>> kinetic);

  const Network& base() const noexcept { return base_; }
  const std::vector<std::optional<Complex>>& kinetic() const noexcept { return kinetic_; }
  bool has_kinetic(std::size_t j) const { return kinetic_.at(j).has_value(); }
  /// Throws when complex j has no kinetic complex.
  const Complex& kinetic_complex(std::size_t j) const;
  bool is_mass_action() const;

 private:
  Network base_;
  std::vector<std::optional<Complex>> kinetic_;
};

struct StructuralMatrices {
  IntMatrix Y;      ///< m x n, column j is complex j
  IntMatrix Ia;     ///< n x r incidence, -1 at reactant, +1 at product
  IntMatrix Gamma;  ///< m x r, Y * Ia
  IntMatrix Ik;     ///< r x n, 1 at (i, reactant of i)
};

StructuralMatrices build_matrices(const Network& net);

/// Rate vector k in reaction order; throws ValidationError if a symbol is missing.
RatVec rate_vector(const Network& net, const RateMap& rates);

/// Weighted Laplacian Ia * diag(k) * Ik.
RationalMatrix kinetic_matrix(const Network& net, const RateMap& rates);

/// Mass-action vector field Y Ia diag(k) Ik Psi(x).  x must be strictly positive.
RatVec mass_action_rhs(const Network& net, const RateMap& rates, std::span<const Rational> x);
std::vector<double> mass_action_rhs(const Network& net, const RateMap& rates, std::span<const double> x);

/// Generalized mass-action field: monomials use the kinetic complexes of the
/// reactants.
RatVec gmas_rhs(const GeneralizedNetwork& net, const RateMap& rates, std::span<const Rational> x);
std::vector<double> gmas_rhs(const GeneralizedNetwork& net, const RateMap& rates, std::span<const double> x);

/// Per-reaction fluxes k_i x^{y_reactant(i)} (mass action).
std::vector<double> reaction_fluxes(const Network& net, const RateMap& rates, std::span<const double> x);

// Text format ---------------------------------------------------------------

Network parse_network(std::string_view text);
GeneralizedNetwork parse_generalized_network(std::string_view text);
std::string serialize_network(const Network& net);
std::string serialize_generalized_network(const GeneralizedNetwork& net);

/// Parses "A + 2 B", "0", or with allow_signed "-A + B" / "+F" into a vector
/// over the network's species.
IntVec parse_species_combination(std::string_view text, const Network& net, bool allow_signed);

/// Reads "symbol = value" lines ('#' comments allowed).
std::map<std::string, Rational> parse_assignments(std::string_view text);

/// Concentrations in species order from "species = value" lines.
RatVec parse_state(std::string_view text, const Network& net);

bool is_identifier(std::string_view s);

}  // namespace crnt

#endif
