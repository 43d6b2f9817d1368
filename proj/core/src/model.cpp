#include "crnt/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "crnt/error.hpp"

namespace crnt {

Complex::Complex(IntVec coeffs) : coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_)
    if (c < 0) throw ValidationError("complex with a negative coefficient");
}

bool Complex::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; });
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  if (!alpha(s[0])) return false;
  for (char c : s)
    if (!alpha(c) && !(c >= '0' && c <= '9')) return false;
  return true;
}

Network::Network(std::vector<std::string> species, std::vector<Complex> complexes,
                 std::vector<Reaction> reactions, std::string name, bool require_species_usage)
    : name_(std::move(name)), complexes_(std::move(complexes)), reactions_(std::move(reactions)) {
  const std::size_t m = species.size();
  std::set<std::string> seen;
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_identifier(species[i])) throw ValidationError("invalid species name '" + species[i] + "'");
    if (!seen.insert(species[i]).second) throw ValidationError("duplicate species '" + species[i] + "'");
    species_.push_back({species[i], i});
  }

  std::set<Complex> distinct;
  for (const auto& c : complexes_) {
    if (c.size() != m) throw DimensionError("complex length differs from species count");
    if (!distinct.insert(c).second) throw ValidationError("duplicate complex " + format(c));
  }

  std::set<std::string> rates;
  std::vector<bool> used(complexes_.size(), false);
  for (std::size_t i = 0; i < reactions_.size(); ++i) {
    const auto& r = reactions_[i];
    if (r.reactant >= complexes_.size() || r.product >= complexes_.size())
      throw ValidationError("reaction " + std::to_string(i) + " refers to an unknown complex");
    if (r.reactant == r.product)
      throw ValidationError("self-reaction " + format(complexes_[r.reactant]) + " -> " +
                            format(complexes_[r.product]));
    if (r.rate.empty()) throw ValidationError("reaction " + std::to_string(i) + " has no rate symbol");
    if (!rates.insert(r.rate).second) throw ValidationError("duplicate rate symbol '" + r.rate + "'");
    used[r.reactant] = used[r.product] = true;
  }
  for (std::size_t j = 0; j < complexes_.size(); ++j)
    if (!used[j]) throw ValidationError("complex " + format(complexes_[j]) + " is not used by any reaction");

  if (require_species_usage) {
    for (std::size_t s = 0; s < m; ++s) {
      bool present = std::any_of(complexes_.begin(), complexes_.end(), [&](const Complex& c) { return c[s] > 0; });
      if (!present) throw ValidationError("species '" + species_[s].name + "' does not occur in any complex");
    }
  }
}

std::vector<std::string> Network::species_names() const {
  std::vector<std::string> out;
  for (const auto& s : species_) out.push_back(s.name);
  return out;
}

IntVec Network::reaction_vector(std::size_t i) const {
  const auto& r = reactions_.at(i);
  IntVec v(species_count());
  for (std::size_t s = 0; s < v.size(); ++s) v[s] = complexes_[r.product][s] - complexes_[r.reactant][s];
  return v;
}

std::vector<std::size_t> Network::reactant_complexes() const {
  std::set<std::size_t> out;
  for (const auto& r : reactions_) out.insert(r.reactant);
  return {out.begin(), out.end()};
}

bool Network::is_reactant(std::size_t complex) const {
  return std::any_of(reactions_.begin(), reactions_.end(), [&](const Reaction& r) { return r.reactant == complex; });
}

std::optional<std::size_t> Network::find_complex(const Complex& c) const {
  auto it = std::find(complexes_.begin(), complexes_.end(), c);
  if (it == complexes_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - complexes_.begin());
}

std::optional<std::size_t> Network::find_species(std::string_view name) const {
  for (const auto& s : species_)
    if (s.name == name) return s.index;
  return std::nullopt;
}

std::optional<std::size_t> Network::find_reaction(std::string_view rate) const {
  for (std::size_t i = 0; i < reactions_.size(); ++i)
    if (reactions_[i].rate == rate) return i;
  return std::nullopt;
}

std::string Network::format(const Complex& c) const { return format(c.coeffs(), false); }

std::string Network::format(const IntVec& v, bool signed_terms) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t s = 0; s < v.size(); ++s) {
    if (v[s] == 0) continue;
    std::int64_t a = v[s];
    if (first) {
      if (a < 0) os << "-";
      else if (signed_terms) os << "+";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    if (a < 0) a = -a;
    if (a != 1) os << a << " ";
    os << (s < species_.size() ? species_[s].name : "?");
    first = false;
  }
  if (first) return signed_terms ? "+0" : "0";
  return os.str();
}

std::string Network::format_reaction(std::size_t i) const {
  const auto& r = reactions_.at(i);
  return format(complexes_[r.reactant]) + " -> " + format(complexes_[r.product]) + " ; " + r.rate;
}

GeneralizedNetwork::GeneralizedNetwork(Network base) : base_(std::move(base)) {
  for (const auto& c : base_.complexes()) kinetic_.emplace_back(c);
}

GeneralizedNetwork::GeneralizedNetwork(Network base, std::vector<std::optional<Complex>> kinetic)
    : base_(std::move(base)), kinetic_(std::move(kinetic)) {
  if (kinetic_.size() != base_.complex_count())
    throw DimensionError("kinetic complex list does not match the complex count");
  for (const auto& k : kinetic_)
    if (k && k->size() != base_.species_count()) throw DimensionError("kinetic complex has wrong length");
  for (std::size_t j : base_.reactant_complexes())
    if (!kinetic_[j])
      throw ValidationError("reactant complex " + base_.format(base_.complex(j)) + " has no kinetic complex");
}

const Complex& GeneralizedNetwork::kinetic_complex(std::size_t j) const {
  if (!kinetic_.at(j)) throw ValidationError("complex " + base_.format(base_.complex(j)) + " has no kinetic complex");
  return *kinetic_[j];
}

bool GeneralizedNetwork::is_mass_action() const {
  for (std::size_t j = 0; j < kinetic_.size(); ++j)
    if (kinetic_[j] && *kinetic_[j] != base_.complex(j)) return false;
  return true;
}

StructuralMatrices build_matrices(const Network& net) {
  const std::size_t m = net.species_count(), n = net.complex_count(), r = net.reaction_count();
  StructuralMatrices s{IntMatrix(m, n), IntMatrix(n, r), IntMatrix(m, r), IntMatrix(r, n)};
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) s.Y(i, j) = net.complex(j)[i];
  for (std::size_t k = 0; k < r; ++k) {
    const auto& rx = net.reaction(k);
    s.Ia(rx.reactant, k) = -1;
    s.Ia(rx.product, k) = 1;
    s.Ik(k, rx.reactant) = 1;
    auto v = net.reaction_vector(k);
    for (std::size_t i = 0; i < m; ++i) s.Gamma(i, k) = v[i];
  }
  return s;
}

RatVec rate_vector(const Network& net, const RateMap& rates) {
  RatVec k;
  for (const auto& r : net.reactions()) {
    auto it = rates.find(r.rate);
    if (it == rates.end()) throw ValidationError("no value for rate constant '" + r.rate + "'");
    if (sgn(it->second) <= 0) throw ValidationError("rate constant '" + r.rate + "' must be positive");
    k.push_back(it->second);
  }
  return k;
}

RationalMatrix kinetic_matrix(const Network& net, const RateMap& rates) {
  RatVec k = rate_vector(net, rates);
  RationalMatrix a(net.complex_count(), net.complex_count());
  for (std::size_t i = 0; i < net.reaction_count(); ++i) {
    const auto& r = net.reaction(i);
    a(r.product, r.reactant) += k[i];
    a(r.reactant, r.reactant) -= k[i];
  }
  return a;
}

namespace {

template <typename T>
T power(const T& base, std::int64_t e) {
  T out = T(1);
  for (std::int64_t i = 0; i < e; ++i) out *= base;
  return out;
}

template <typename T>
std::vector<T> fluxes(const Network& net, const std::vector<const Complex*>& monomials,
                      const RateMap& rates, std::span<const T> x) {
  if (x.size() != net.species_count()) throw DimensionError("state vector has wrong length");
  for (const auto& xi : x)
    if (!(xi > 0)) throw ValidationError("concentrations must be strictly positive");
  std::vector<T> v;
  for (std::size_t i = 0; i < net.reaction_count(); ++i) {
    auto it = rates.find(net.reaction(i).rate);
    if (it == rates.end()) throw ValidationError("no value for rate constant '" + net.reaction(i).rate + "'");
    T f;
    if constexpr (std::is_same_v<T, double>) f = it->second.get_d();
    else f = it->second;
    const Complex& y = *monomials[i];
    for (std::size_t s = 0; s < y.size(); ++s)
      if (y[s] != 0) f *= power<T>(x[s], y[s]);
    v.push_back(f);
  }
  return v;
}

template <typename T>
std::vector<T> rhs(const Network& net, const std::vector<const Complex*>& monomials, const RateMap& rates,
                   std::span<const T> x) {
  std::vector<T> v = fluxes<T>(net, monomials, rates, x);
  std::vector<T> out(net.species_count(), T(0));
  for (std::size_t i = 0; i < net.reaction_count(); ++i) {
    const auto& r = net.reaction(i);
    const auto& yp = net.complex(r.product);
    const auto& yr = net.complex(r.reactant);
    for (std::size_t s = 0; s < out.size(); ++s) {
      auto d = yp[s] - yr[s];
      if (d != 0) out[s] += T(static_cast<double>(d)) * v[i];
    }
  }
  return out;
}

std::vector<const Complex*> mass_action_monomials(const Network& net) {
  std::vector<const Complex*> out;
  for (const auto& r : net.reactions()) out.push_back(&net.complex(r.reactant));
  return out;
}

std::vector<const Complex*> kinetic_monomials(const GeneralizedNetwork& g) {
  std::vector<const Complex*> out;
  for (const auto& r : g.base().reactions()) out.push_back(&g.kinetic_complex(r.reactant));
  return out;
}

}  // namespace

RatVec mass_action_rhs(const Network& net, const RateMap& rates, std::span<const Rational> x) {
  return rhs<Rational>(net, mass_action_monomials(net), rates, x);
}

std::vector<double> mass_action_rhs(const Network& net, const RateMap& rates, std::span<const double> x) {
  return rhs<double>(net, mass_action_monomials(net), rates, x);
}

RatVec gmas_rhs(const GeneralizedNetwork& g, const RateMap& rates, std::span<const Rational> x) {
  return rhs<Rational>(g.base(), kinetic_monomials(g), rates, x);
}

std::vector<double> gmas_rhs(const GeneralizedNetwork& g, const RateMap& rates, std::span<const double> x) {
  return rhs<double>(g.base(), kinetic_monomials(g), rates, x);
}

std::vector<double> reaction_fluxes(const Network& net, const RateMap& rates, std::span<const double> x) {
  return fluxes<double>(net, mass_action_monomials(net), rates, x);
}

}  // namespace crnt
