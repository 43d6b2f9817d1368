#include "crnt/translation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "crnt/error.hpp"

namespace crnt {

namespace {

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVec subtract(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec difference(const Network& net, std::size_t p, std::size_t q) {
  return to_rational(subtract(net.complex(p).coeffs(), net.complex(q).coeffs()));
}

std::string rate_of(const Network& net, std::size_t i) { return net.reaction(i).rate; }

}  // namespace

std::pair<Translation, TranslationClassification> validate_translation(const Network& source,
                                                                       const GeneralizedNetwork& candidate,
                                                                       std::vector<std::size_t> h1,
                                                                       std::map<std::size_t, std::size_t> h2) {
  const Network& tn = candidate.base();
  const std::size_t r = source.reaction_count();
  if (tn.species_count() != source.species_count())
    throw TranslationError("translated network has a different species set");
  if (h1.size() != r || tn.reaction_count() != r) throw TranslationError("h1 is not a bijection between reaction sets");
  {
    std::vector<bool> hit(r, false);
    for (auto j : h1) {
      if (j >= r || hit[j]) throw TranslationError("h1 is not a bijection between reaction sets");
      hit[j] = true;
    }
  }
  for (std::size_t i = 0; i < r; ++i)
    if (source.reaction_vector(i) != tn.reaction_vector(h1[i]))
      throw TranslationError("condition 1 (reaction vectors preserved) fails for reaction " + rate_of(source, i));

  const auto cr = source.reactant_complexes();
  for (auto p : cr)
    if (!h2.count(p))
      throw TranslationError("condition 2: h2 is undefined on reactant complex " + source.format(source.complex(p)));
  for (const auto& [p, j] : h2) {
    if (!std::binary_search(cr.begin(), cr.end(), p))
      throw TranslationError("condition 2: h2 is defined on a non-reactant complex");
    if (j >= tn.complex_count()) throw TranslationError("condition 2: h2 points outside the translated network");
  }
  for (std::size_t i = 0; i < r; ++i)
    if (h2.at(source.reaction(i).reactant) != tn.reaction(h1[i]).reactant)
      throw TranslationError("condition 2 (reactant complexes correspond) fails for reaction " + rate_of(source, i));

  Translation t;
  t.source = source;
  t.translated = candidate;
  t.h1 = std::move(h1);
  t.h2 = std::move(h2);
  t.kinetic_source.assign(tn.complex_count(), std::nullopt);

  std::set<std::size_t> kinetic_set;
  for (std::size_t j = 0; j < tn.complex_count(); ++j) {
    if (!tn.is_reactant(j)) continue;
    const Complex& k = candidate.kinetic_complex(j);
    for (const auto& [p, image] : t.h2)
      if (image == j && source.complex(p) == k) t.kinetic_source[j] = p;
    if (!t.kinetic_source[j])
      throw TranslationError("condition 3 (kinetic complex is a preimage) fails for translated complex " +
                             tn.format(tn.complex(j)));
    kinetic_set.insert(*t.kinetic_source[j]);
  }
  for (std::size_t j = 0; j < tn.complex_count(); ++j) {
    if (tn.is_reactant(j) || !candidate.has_kinetic(j)) continue;
    for (auto p : kinetic_set)
      if (source.complex(p) == candidate.kinetic_complex(j)) t.kinetic_source[j] = p;
    if (!t.kinetic_source[j])
      throw TranslationError("condition 3 fails for product-only complex " + tn.format(tn.complex(j)));
  }
  t.kinetic_set.assign(kinetic_set.begin(), kinetic_set.end());

  for (std::size_t i = 0; i < r; ++i)
    t.shift.push_back(subtract(tn.complex(tn.reaction(t.h1[i]).reactant).coeffs(),
                               source.complex(source.reaction(i).reactant).coeffs()));

  TranslationClassification cls = classify(t);
  return {std::move(t), std::move(cls)};
}

TranslationClassification classify(const Translation& t) {
  TranslationClassification c;
  std::map<std::size_t, std::size_t> preimages;
  for (const auto& [p, j] : t.h2) ++preimages[j];
  c.proper = true;
  for (const auto& [j, count] : preimages)
    if (count > 1) {
      c.proper = false;
      c.improper_complexes.push_back(j);
    }
  c.strong = is_weakly_reversible(t.translated.base());
  for (std::size_t i = 0; i < t.source.reaction_count(); ++i) {
    const std::size_t p = t.source.reaction(i).reactant;
    const auto& ks = t.kinetic_source.at(t.h2.at(p));
    if (!ks) throw TranslationError("translated reactant complex without kinetic complex");
    c.kinetically_relevant.push_back(*ks);
    if (*ks != p) c.improper_reactions.push_back(i);
  }
  return c;
}

Translation translate_by_shifts(const Network& source, const std::vector<IntVec>& shift,
                                const std::map<Complex, std::size_t>& kinetic_choice) {
  const std::size_t r = source.reaction_count(), m = source.species_count();
  if (shift.size() != r) throw DimensionError("one shift per reaction is required");
  std::vector<Complex> complexes;
  std::vector<Reaction> reactions;
  auto intern = [&](const IntVec& v, std::size_t i) {
    for (auto x : v)
      if (x < 0) throw TranslationError("shift makes a complex negative in reaction " + rate_of(source, i));
    Complex c(v);
    auto it = std::find(complexes.begin(), complexes.end(), c);
    if (it != complexes.end()) return static_cast<std::size_t>(it - complexes.begin());
    complexes.push_back(std::move(c));
    return complexes.size() - 1;
  };
  std::map<std::size_t, std::size_t> h2;
  for (std::size_t i = 0; i < r; ++i) {
    if (shift[i].size() != m) throw DimensionError("shift has wrong length");
    const auto& rx = source.reaction(i);
    std::size_t a = intern(add(source.complex(rx.reactant).coeffs(), shift[i]), i);
    std::size_t b = intern(add(source.complex(rx.product).coeffs(), shift[i]), i);
    reactions.push_back({a, b, rx.rate});
    auto [it, inserted] = h2.emplace(rx.reactant, a);
    if (!inserted && it->second != a)
      throw TranslationError("condition 2: reactions sharing the reactant " + source.format(source.complex(rx.reactant)) +
                             " are shifted differently");
  }
  Network tn(source.species_names(), complexes, reactions, source.name(), false);

  std::vector<std::optional<Complex>> kin(tn.complex_count());
  for (std::size_t j = 0; j < tn.complex_count(); ++j) {
    if (!tn.is_reactant(j)) continue;
    std::vector<std::size_t> pre;
    for (const auto& [p, image] : h2)
      if (image == j) pre.push_back(p);
    std::size_t chosen = pre.front();
    if (auto it = kinetic_choice.find(tn.complex(j)); it != kinetic_choice.end()) {
      if (std::find(pre.begin(), pre.end(), it->second) == pre.end())
        throw TranslationError("condition 3: kinetic choice for " + tn.format(tn.complex(j)) +
                               " is not one of its preimages");
      chosen = it->second;
    }
    kin[j] = source.complex(chosen);
  }
  std::vector<std::size_t> h1(r);
  std::iota(h1.begin(), h1.end(), 0);
  return validate_translation(source, GeneralizedNetwork(std::move(tn), std::move(kin)), std::move(h1), std::move(h2))
      .first;
}

SubspaceBasis improper_kinetic_subspace(const Translation& t) {
  TranslationClassification c = classify(t);
  std::vector<RatVec> gens;
  for (auto i : c.improper_reactions)
    gens.push_back(difference(t.source, t.source.reaction(i).reactant, c.kinetically_relevant[i]));
  return SubspaceBasis::span_of(t.source.species_count(), gens);
}

std::vector<std::pair<std::size_t, std::size_t>> kinetic_pair_basis(const Translation& t) {
  const Network& tn = t.translated.base();
  auto part = linkage_classes(tn);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<RatVec> rows;
  for (const auto& cls : part.classes) {
    std::vector<std::size_t> ks;
    for (auto j : cls)
      if (t.kinetic_source[j]) ks.push_back(*t.kinetic_source[j]);
    for (std::size_t a = 0; a < ks.size(); ++a)
      for (std::size_t b = a + 1; b < ks.size(); ++b) {
        RatVec v = difference(t.source, ks[a], ks[b]);
        if (is_zero(v)) continue;
        rows.push_back(v);
        if (rank(RationalMatrix::from_rows(rows)) == rows.size()) pairs.emplace_back(ks[a], ks[b]);
        else rows.pop_back();
      }
  }
  return pairs;
}

ResolvabilityReport check_weak_resolvability(const Translation& t) {
  TranslationClassification c = classify(t);
  ResolvabilityReport rep;
  rep.strong = c.strong;
  rep.improper_subspace = improper_kinetic_subspace(t);
  rep.pair_basis = kinetic_pair_basis(t);
  if (!c.strong) {
    rep.reason = "translation is not strong";
    return rep;
  }
  std::vector<RatVec> vecs;
  for (const auto& [p, q] : rep.pair_basis) vecs.push_back(difference(t.source, p, q));
  SubspaceBasis tilde = SubspaceBasis::from_independent(t.source.species_count(), vecs);
  if (!tilde.contains(rep.improper_subspace)) {
    rep.reason = "improper kinetic subspace is not contained in the kinetic-order subspace";
    return rep;
  }
  rep.weakly_resolvable = true;
  for (auto i : c.improper_reactions) {
    auto coords = solve_coords(tilde, difference(t.source, t.source.reaction(i).reactant, c.kinetically_relevant[i]));
    if (!coords) throw Error("internal: coordinates missing after containment check");
    rep.coordinates[i] = *coords;
  }
  return rep;
}

Network semi_proper_network(const Translation& t, std::map<std::size_t, std::string>* fresh) {
  TranslationClassification c = classify(t);
  const Network& tn = t.translated.base();
  std::set<std::string> taken;
  for (const auto& rx : t.source.reactions()) taken.insert(rx.rate);
  std::vector<Reaction> reactions = tn.reactions();
  std::set<std::size_t> improper(c.improper_reactions.begin(), c.improper_reactions.end());
  for (std::size_t i = 0; i < t.source.reaction_count(); ++i) {
    std::string name = t.source.reaction(i).rate;
    if (improper.count(i)) {
      name += "~";
      while (taken.count(name)) name += "~";
      taken.insert(name);
      if (fresh) (*fresh)[i] = name;
    }
    reactions[t.h1[i]].rate = name;
  }
  return Network(tn.species_names(), tn.complexes(), reactions, tn.name(), false);
}

ResolvabilityReport check_strong_resolvability(const Translation& t, const TreeOptions& options) {
  ResolvabilityReport rep = check_weak_resolvability(t);
  if (!rep.weakly_resolvable) return rep;
  if (rep.coordinates.empty()) {
    rep.strongly_resolvable = true;
    return rep;
  }
  Network semi = semi_proper_network(t, &rep.fresh_symbol);
  TreeConstantSet tc = tree_constants(semi, options);
  std::set<std::string> vars;
  for (const auto& [i, s] : rep.fresh_symbol) vars.insert(s);
  std::map<std::string, Polynomial> unit;
  for (const auto& v : vars) unit[v] = Polynomial(1);

  rep.strongly_resolvable = true;
  for (const auto& [i, coords] : rep.coordinates) {
    PowerProduct pp;
    for (std::size_t j = 0; j < coords.size(); ++j) {
      if (coords[j] == 0) continue;
      const auto [p, q] = rep.pair_basis[j];
      pp.factors.push_back({tc.symbolic[t.h2.at(p)], tc.symbolic[t.h2.at(q)], coords[j]});
    }
    rep.factor[i] = pp;
    if (!power_product_independent_of(pp, vars)) {
      rep.strongly_resolvable = false;
      if (rep.reason.empty())
        rep.reason = "adjustment factor for reaction " + rate_of(t.source, i) + " depends on the improper rates";
      continue;
    }
    if (pp.has_integer_exponents()) {
      auto [n, d] = pp.as_fraction();
      rep.simplified_factor[i] = simplify_ratio(n.substitute(unit), d.substitute(unit));
    }
  }
  return rep;
}

TranslatedRates translated_rate_constants(const Translation& t, const RateMap& rates, const TreeOptions& options) {
  TranslationClassification c = classify(t);
  const std::size_t r = t.source.reaction_count();
  TranslatedRates out;
  out.values.assign(r, Rational(0));
  out.symbolic.assign(r, {Polynomial(), Polynomial(1)});
  RatVec k = rate_vector(t.source, rates);

  std::optional<ResolvabilityReport> rep;
  if (!c.improper_reactions.empty()) {
    rep = check_strong_resolvability(t, options);
    if (!rep->strongly_resolvable)
      throw HypothesisError("improper translation is not strongly resolvable: " + rep->reason);
  }
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t ti = t.h1[i];
    Polynomial sym = Polynomial::variable(t.source.reaction(i).rate);
    if (rep && rep->factor.count(i)) {
      auto it = rep->simplified_factor.find(i);
      if (it == rep->simplified_factor.end())
        throw UnsupportedError("adjustment factor with a fractional exponent for reaction " + rate_of(t.source, i));
      const auto& [n, d] = it->second;
      out.values[ti] = n.eval(rates) / d.eval(rates) * k[i];
      out.symbolic[ti] = {n * sym, d};
    } else {
      out.values[ti] = k[i];
      out.symbolic[ti] = {sym, Polynomial(1)};
    }
  }
  for (std::size_t ti = 0; ti < r; ++ti) out.as_map[t.translated.base().reaction(ti).rate] = out.values[ti];
  return out;
}

std::vector<Polynomial> translated_tree_constants(const Translation& t, const TreeOptions& options) {
  std::map<std::size_t, std::string> fresh;
  Network semi = semi_proper_network(t, &fresh);
  std::vector<Polynomial> ks = tree_constants(semi, options).symbolic;
  if (fresh.empty()) return ks;

  ResolvabilityReport rep = check_strong_resolvability(t, options);
  if (!rep.strongly_resolvable) throw HypothesisError("improper translation is not strongly resolvable: " + rep.reason);
  for (const auto& [i, name] : fresh) {
    auto it = rep.simplified_factor.find(i);
    if (it == rep.simplified_factor.end())
      throw UnsupportedError("adjustment factor with a fractional exponent for reaction " + rate_of(t.source, i));
    const auto& [n, d] = it->second;
    Polynomial rate = n * Polynomial::variable(t.source.reaction(i).rate);
    // Tree constants are affine in each edge weight.
    for (auto& k : ks) {
      auto coeffs = k.coefficients_in(name);
      Polynomial a = coeffs[0];
      Polynomial b = coeffs.size() > 1 ? coeffs[1] : Polynomial();
      k = d * a + rate * b;
    }
  }
  return ks;
}

RatVec translated_tree_constants(const Translation& t, const RateMap& rates, const TreeOptions& options) {
  std::map<std::size_t, std::string> fresh;
  Network semi = semi_proper_network(t, &fresh);
  TranslatedRates tr = translated_rate_constants(t, rates, options);
  RateMap values = rates;
  for (std::size_t i = 0; i < t.source.reaction_count(); ++i) {
    auto it = fresh.find(i);
    values[it == fresh.end() ? t.source.reaction(i).rate : it->second] = tr.values[t.h1[i]];
  }
  RatVec out;
  for (const auto& k : tree_constants(semi, options).symbolic) out.push_back(k.eval(values));
  return out;
}

}  // namespace crnt
