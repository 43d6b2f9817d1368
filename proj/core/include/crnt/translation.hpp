#ifndef CRNT_TRANSLATION_HPP
#define CRNT_TRANSLATION_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "crnt/graph.hpp"
#include "crnt/linalg.hpp"
#include "crnt/model.hpp"
#include "crnt/polynomial.hpp"
#include "crnt/tree_constants.hpp"

namespace crnt {

/// A source network, its translated generalized network, and the maps between
/// them.  h1 sends source reaction i to translated reaction h1[i]; h2 sends
/// every source reactant complex to a translated reactant complex.
struct Translation {
  Network source;
  GeneralizedNetwork translated;
  std::vector<std::size_t> h1;
  std::map<std::size_t, std::size_t> h2;
  /// Translated complex -> source complex whose stoichiometry supplies its
  /// kinetic complex (empty for product-only complexes without one).
  std::vector<std::optional<std::size_t>> kinetic_source;
  /// CR_K: sorted source complexes used as kinetic complexes.
  std::vector<std::size_t> kinetic_set;
  /// Per source reaction, translated minus source stoichiometry.
  std::vector<IntVec> shift;
};

struct TranslationClassification {
  bool proper = false;  ///< h2 injective
  bool strong = false;  ///< translated network weakly reversible
  std::vector<std::size_t> improper_complexes;  ///< translated complexes with several preimages
  std::vector<std::size_t> improper_reactions;  ///< source reactions whose reactant is not in CR_K
  /// Source reaction -> the kinetically relevant source complex of its reactant.
  std::vector<std::size_t> kinetically_relevant;
};

/// Checks the three defining conditions and classifies.  Throws
/// TranslationError naming the violated condition.
std::pair<Translation, TranslationClassification> validate_translation(
    const Network& source, const GeneralizedNetwork& candidate, std::vector<std::size_t> h1,
    std::map<std::size_t, std::size_t> h2);

/// Builds the translation obtained by adding shift[i] to both complexes of
/// source reaction i.  Translated complexes are numbered by first occurrence
/// (reactant, then product, reaction by reaction).  For a translated complex
/// reached from several source reactants, `kinetic_choice` may name the
/// source complex that supplies its kinetics; otherwise the smallest index wins.
Translation translate_by_shifts(const Network& source, const std::vector<IntVec>& shift,
                                const std::map<Complex, std::size_t>& kinetic_choice = {});

TranslationClassification classify(const Translation& t);

/// span{ y_rho(i) - y_rho(i)_K : i improper }
SubspaceBasis improper_kinetic_subspace(const Translation& t);

/// A basis of the kinetic-order subspace made of differences of kinetic
/// complexes inside translated linkage classes: each entry is a pair of
/// source complexes (p, q) standing for y_p - y_q.
std::vector<std::pair<std::size_t, std::size_t>> kinetic_pair_basis(const Translation& t);

struct ResolvabilityReport {
  bool strong = false;
  bool weakly_resolvable = false;
  bool strongly_resolvable = false;
  SubspaceBasis improper_subspace;
  std::vector<std::pair<std::size_t, std::size_t>> pair_basis;
  /// Improper source reaction -> coordinates of y_rho(i) - y_rho(i)_K in the pair basis.
  std::map<std::size_t, RatVec> coordinates;
  /// Improper source reaction -> fresh rate symbol used in the semi-proper graph.
  std::map<std::size_t, std::string> fresh_symbol;
  /// Improper source reaction -> strong kinetic adjustment factor.
  std::map<std::size_t, PowerProduct> factor;
  /// Improper source reaction -> simplified numerator/denominator of the factor
  /// (integer exponents only).
  std::map<std::size_t, std::pair<Polynomial, Polynomial>> simplified_factor;
  std::string reason;  ///< why resolvability fails, if it does
};

ResolvabilityReport check_weak_resolvability(const Translation& t);
ResolvabilityReport check_strong_resolvability(const Translation& t, const TreeOptions& options = {});

/// Translated network with improper reactions renamed to fresh symbols
/// ("k12~"), in the same reaction order.
Network semi_proper_network(const Translation& t, std::map<std::size_t, std::string>* fresh = nullptr);

struct TranslatedRates {
  /// Values per translated reaction (translated index).
  RatVec values;
  /// Symbolic numerator/denominator per translated reaction.
  std::vector<std::pair<Polynomial, Polynomial>> symbolic;
  /// Same values keyed by the translated rate symbols.
  RateMap as_map;
};

/// Rate constants of the translated system.  Proper translations keep the
/// source rates; improper ones must be strongly resolvable.
TranslatedRates translated_rate_constants(const Translation& t, const RateMap& rates,
                                          const TreeOptions& options = {});

/// Tree constants of the translated network as polynomials in the source rate
/// symbols.  For improper translations every constant is multiplied by the
/// common denominator of the adjustment factors so the result stays polynomial.
std::vector<Polynomial> translated_tree_constants(const Translation& t, const TreeOptions& options = {});

/// Exact tree constants of the translated network at the given source rates.
RatVec translated_tree_constants(const Translation& t, const RateMap& rates, const TreeOptions& options = {});

// Search --------------------------------------------------------------------

struct SearchOptions {
  std::size_t max_orderings = 5040;   ///< per stoichiometric generator
  std::size_t max_candidates = 10000; ///< shift assignments evaluated
  std::size_t max_bumps = 2;          ///< extra unit shifts tried to make a candidate proper
  std::size_t max_kinetic_choices = 256;
};

struct TranslationCandidate {
  Translation translation;
  TranslationClassification classification;
  DeficiencyReport deficiency;  ///< of the translated network, with kinetic deficiency
  std::optional<ResolvabilityReport> resolvability;  ///< improper candidates only
  std::size_t bumps = 0;
};

/// Searches for strong translations with zero effective deficiency.  Proper
/// candidates come first; the order is deterministic.
std::vector<TranslationCandidate> find_translations(const Network& net, const SearchOptions& options = {});

/// Evaluates one translation for the search report (deficiencies, resolvability).
TranslationCandidate assess_translation(const Translation& t);

// Text format ----------------------------------------------------------------

/// Lines "shift <rate>: <signed species combination>" (one per reaction) and
/// optional "kinetic-choice <translated complex> := <source complex>".
Translation parse_translation(std::string_view text, const Network& source);
std::string serialize_translation(const Translation& t);

}  // namespace crnt

#endif
