// Translation search.
//
// Each stoichiometric generator with 0/1 entries is turned into a cycle of
// its support reactions; consecutive reactions in the cycle are shifted so
// that the product of one becomes the reactant of the next.  Reactions with
// a common reactant, and reactions on the support of a cyclic generator, are
// shifted together.  The resulting difference constraints are kept in a
// union-find with offsets, which detects inconsistent orderings early.  Each
// connected group of reactions then receives the smallest shift keeping all
// complexes nonnegative.

#include <algorithm>
#include <functional>
#include <set>

#include "crnt/cone.hpp"
#include "crnt/error.hpp"
#include "crnt/translation.hpp"

namespace crnt {

namespace {

IntVec plus(const IntVec& a, const IntVec& b) {
  IntVec o(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) o[i] = a[i] + b[i];
  return o;
}

IntVec minus(const IntVec& a, const IntVec& b) {
  IntVec o(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) o[i] = a[i] - b[i];
  return o;
}

// s_i = s_parent(i) + offset_i
struct OffsetUnionFind {
  std::vector<std::size_t> parent;
  std::vector<IntVec> offset;

  OffsetUnionFind(std::size_t n, std::size_t m) : parent(n), offset(n, IntVec(m, 0)) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }

  std::pair<std::size_t, IntVec> find(std::size_t i) const {
    IntVec acc(offset[i].size(), 0);
    while (parent[i] != i) {
      acc = plus(acc, offset[i]);
      i = parent[i];
    }
    return {i, acc};
  }

  // Requires s_b - s_a = d.
  bool unite(std::size_t a, std::size_t b, const IntVec& d) {
    auto [ra, oa] = find(a);
    auto [rb, ob] = find(b);
    if (ra == rb) return minus(ob, oa) == d;
    parent[rb] = ra;
    offset[rb] = minus(plus(oa, d), ob);
    return true;
  }
};

struct Search {
  const Network& net;
  const SearchOptions& opt;
  std::vector<std::vector<std::size_t>> generators;  // supports of 0/1 stoichiometric generators
  std::size_t evaluated = 0;
  std::set<std::pair<std::vector<IntVec>, std::vector<std::size_t>>> seen;
  std::set<std::vector<IntVec>> seen_shifts;
  std::vector<TranslationCandidate> found;

  Search(const Network& n, const SearchOptions& o) : net(n), opt(o) {}

  const IntVec& y(std::size_t c) const { return net.complex(c).coeffs(); }
  const IntVec& reactant(std::size_t i) const { return y(net.reaction(i).reactant); }
  const IntVec& product(std::size_t i) const { return y(net.reaction(i).product); }
  bool exhausted() const { return evaluated >= opt.max_candidates; }

  void dfs(std::size_t g, const OffsetUnionFind& uf) {
    if (exhausted()) return;
    if (g == generators.size()) {
      leaf(uf);
      return;
    }
    const auto& support = generators[g];
    std::size_t orderings = 0;
    bool any = false;
    std::vector<std::size_t> rest(support.begin() + 1, support.end());
    std::vector<bool> used(rest.size(), false);

    std::function<void(std::size_t, std::size_t, const OffsetUnionFind&)> extend =
        [&](std::size_t prev, std::size_t depth, const OffsetUnionFind& cur) {
          if (orderings >= opt.max_orderings || exhausted()) return;
          if (depth == rest.size()) {
            ++orderings;
            OffsetUnionFind closed = cur;
            const std::size_t first = support.front();
            if (!closed.unite(prev, first, minus(product(prev), reactant(first)))) return;
            any = true;
            dfs(g + 1, closed);
            return;
          }
          for (std::size_t k = 0; k < rest.size(); ++k) {
            if (used[k]) continue;
            OffsetUnionFind next = cur;
            if (!next.unite(prev, rest[k], minus(product(prev), reactant(rest[k])))) continue;
            used[k] = true;
            extend(rest[k], depth + 1, next);
            used[k] = false;
          }
        };
    extend(support.front(), 0, uf);
    // A generator that cannot be cycled consistently is left alone.
    if (!any) dfs(g + 1, uf);
  }

  void leaf(const OffsetUnionFind& uf) {
    const std::size_t r = net.reaction_count(), m = net.species_count();
    std::vector<std::size_t> root(r);
    std::vector<IntVec> off(r);
    std::map<std::size_t, IntVec> lower;
    for (std::size_t i = 0; i < r; ++i) {
      auto [ri, oi] = uf.find(i);
      root[i] = ri;
      off[i] = oi;
      auto [it, inserted] = lower.emplace(ri, IntVec(m, INT64_MIN));
      for (const IntVec* c : {&reactant(i), &product(i)})
        for (std::size_t s = 0; s < m; ++s) it->second[s] = std::max(it->second[s], -((*c)[s] + oi[s]));
    }
    std::vector<IntVec> shifts(r);
    for (std::size_t i = 0; i < r; ++i) shifts[i] = plus(lower[root[i]], off[i]);

    bool proper = evaluate(shifts, 0);
    if (proper || opt.max_bumps == 0) return;

    // Components in reverse order; species already present in the component's
    // shifts first.
    std::vector<std::size_t> comps;
    for (const auto& [c, lb] : lower) comps.push_back(c);
    std::reverse(comps.begin(), comps.end());
    std::vector<std::pair<std::size_t, std::size_t>> options;
    for (auto c : comps) {
      std::vector<bool> present(m, false);
      for (std::size_t i = 0; i < r; ++i)
        if (root[i] == c)
          for (std::size_t s = 0; s < m; ++s) present[s] = present[s] || shifts[i][s] != 0;
      for (std::size_t s = 0; s < m; ++s)
        if (present[s]) options.emplace_back(c, s);
      for (std::size_t s = 0; s < m; ++s)
        if (!present[s]) options.emplace_back(c, s);
    }
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t, std::size_t)> combos = [&](std::size_t start, std::size_t left) -> bool {
      if (exhausted()) return true;
      if (left == 0) {
        std::vector<IntVec> bumped = shifts;
        for (auto o : pick)
          for (std::size_t i = 0; i < r; ++i)
            if (root[i] == options[o].first) bumped[i][options[o].second] += 1;
        return evaluate(bumped, pick.size());
      }
      for (std::size_t o = start; o < options.size(); ++o) {
        pick.push_back(o);
        bool done = combos(o, left - 1);
        pick.pop_back();
        if (done) return true;
      }
      return false;
    };
    for (std::size_t level = 1; level <= opt.max_bumps; ++level)
      if (combos(0, level)) return;
  }

  // Returns true when a proper candidate was accepted.
  bool evaluate(const std::vector<IntVec>& shifts, std::size_t bumps) {
    if (!seen_shifts.insert(shifts).second) return false;
    ++evaluated;
    Translation base;
    try {
      base = translate_by_shifts(net, shifts);
    } catch (const Error&) {
      return false;
    }
    TranslationClassification cls = classify(base);
    if (!cls.strong) return false;
    if (deficiency(base.translated.base()).deficiency != 0) return false;
    if (cls.proper) {
      add(assess_translation(base), bumps);
      return true;
    }

    // Improper: try kinetic choices, preferring a strongly resolvable one.
    std::vector<std::pair<Complex, std::vector<std::size_t>>> choice_sets;
    const Network& tn = base.translated.base();
    for (auto j : cls.improper_complexes) {
      std::vector<std::size_t> pre;
      for (const auto& [p, image] : base.h2)
        if (image == j) pre.push_back(p);
      choice_sets.emplace_back(tn.complex(j), pre);
    }
    std::optional<TranslationCandidate> best;
    int best_rank = -1;
    std::vector<std::size_t> idx(choice_sets.size(), 0);
    for (std::size_t tried = 0; tried < opt.max_kinetic_choices; ++tried) {
      std::map<Complex, std::size_t> choice;
      for (std::size_t k = 0; k < choice_sets.size(); ++k) choice[choice_sets[k].first] = choice_sets[k].second[idx[k]];
      try {
        TranslationCandidate c = assess_translation(translate_by_shifts(net, shifts, choice));
        int rank = !c.resolvability ? 0 : c.resolvability->strongly_resolvable ? 2 : c.resolvability->weakly_resolvable ? 1 : 0;
        if (rank > best_rank) {
          best_rank = rank;
          best = std::move(c);
        }
      } catch (const CapExceeded&) {
        throw;
      } catch (const Error&) {
      }
      if (best_rank == 2) break;
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == choice_sets[k].second.size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
    if (best) add(std::move(*best), bumps);
    return false;
  }

  void add(TranslationCandidate c, std::size_t bumps) {
    c.bumps = bumps;
    std::vector<std::size_t> ks(c.translation.kinetic_set);
    if (!seen.emplace(c.translation.shift, ks).second) return;
    found.push_back(std::move(c));
  }
};

int candidate_rank(const TranslationCandidate& c) {
  if (c.classification.proper) return 0;
  if (c.resolvability && c.resolvability->strongly_resolvable) return 1;
  if (c.resolvability && c.resolvability->weakly_resolvable) return 2;
  return 3;
}

}  // namespace

TranslationCandidate assess_translation(const Translation& t) {
  TranslationCandidate c;
  c.translation = t;
  c.classification = classify(t);
  c.deficiency = deficiency(t.translated);
  if (!c.classification.proper) c.resolvability = check_strong_resolvability(t);
  return c;
}

std::vector<TranslationCandidate> find_translations(const Network& net, const SearchOptions& options) {
  Search search(net, options);
  OffsetUnionFind uf(net.reaction_count(), net.species_count());
  const IntVec zero(net.species_count(), 0);

  // Reactions with a common reactant move together.
  for (std::size_t i = 0; i < net.reaction_count(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (net.reaction(i).reactant == net.reaction(j).reactant) {
        uf.unite(j, i, zero);
        break;
      }

  for (const auto& e : extreme_currents(net)) {
    auto support = e.support();
    if (e.kind == CurrentKind::Cyclic) {
      for (std::size_t k = 1; k < support.size(); ++k) uf.unite(support[0], support[k], zero);
    } else if (std::all_of(support.begin(), support.end(), [&](std::size_t i) { return e.vector[i] == 1; })) {
      search.generators.push_back(std::move(support));
    }
  }

  search.dfs(0, uf);

  auto out = std::move(search.found);
  std::stable_sort(out.begin(), out.end(), [](const TranslationCandidate& a, const TranslationCandidate& b) {
    auto key = [](const TranslationCandidate& c) {
      return std::make_tuple(candidate_rank(c), c.deficiency.kinetic_deficiency.value_or(1) != 0, c.bumps,
                             c.translation.shift);
    };
    return key(a) < key(b);
  });
  return out;
}

}  // namespace crnt
