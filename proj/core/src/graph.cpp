#include "crnt/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "crnt/error.hpp"

namespace crnt {

namespace {

std::vector<std::vector<std::size_t>> group(const std::vector<std::size_t>& label, std::size_t n) {
  std::vector<std::vector<std::size_t>> by_label(n);
  for (std::size_t j = 0; j < label.size(); ++j) by_label[label[j]].push_back(j);
  std::vector<std::vector<std::size_t>> out;
  for (auto& c : by_label)
    if (!c.empty()) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace

LinkagePartition linkage_classes(const Network& net) {
  const std::size_t n = net.complex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& r : net.reactions()) {
    parent[find(r.reactant)] = find(r.product);
    adj[r.reactant].push_back(r.product);
  }
  std::vector<std::size_t> root(n);
  for (std::size_t j = 0; j < n; ++j) root[j] = find(j);

  // Tarjan
  std::vector<std::size_t> scc(n, 0), index(n, 0), low(n, 0);
  std::vector<bool> visited(n, false), on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0, comps = 0;
  std::function<void(std::size_t)> dfs = [&](std::size_t v) {
    visited[v] = true;
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : adj[v]) {
      if (!visited[w]) {
        dfs(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        scc[w] = comps;
      } while (w != v);
      ++comps;
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (!visited[v]) dfs(v);

  LinkagePartition p;
  p.classes = group(root, n);
  p.strong_classes = group(scc, std::max<std::size_t>(comps, 1));
  p.class_of.assign(n, 0);
  p.strong_class_of.assign(n, 0);
  for (std::size_t c = 0; c < p.classes.size(); ++c)
    for (auto j : p.classes[c]) p.class_of[j] = c;
  for (std::size_t c = 0; c < p.strong_classes.size(); ++c)
    for (auto j : p.strong_classes[c]) p.strong_class_of[j] = c;
  return p;
}

bool is_weakly_reversible(const Network& net) {
  auto p = linkage_classes(net);
  return p.classes == p.strong_classes;
}

bool is_reversible(const Network& net) {
  for (const auto& r : net.reactions()) {
    bool back = std::any_of(net.reactions().begin(), net.reactions().end(), [&](const Reaction& q) {
      return q.reactant == r.product && q.product == r.reactant;
    });
    if (!back) return false;
  }
  return true;
}

SubspaceBasis stoichiometric_subspace(const Network& net) {
  std::vector<RatVec> gens;
  for (std::size_t i = 0; i < net.reaction_count(); ++i) gens.push_back(to_rational(net.reaction_vector(i)));
  return SubspaceBasis::span_of(net.species_count(), gens);
}

DeficiencyReport deficiency(const Network& net) {
  DeficiencyReport d;
  d.complexes = net.complex_count();
  d.linkage_classes = linkage_classes(net).classes.size();
  d.rank = stoichiometric_subspace(net).dim();
  if (d.complexes < d.linkage_classes + d.rank) throw Error("negative deficiency; internal inconsistency");
  d.deficiency = d.complexes - d.linkage_classes - d.rank;

  auto mats = build_matrices(net);
  SubspaceBasis kerY = kernel_basis(to_rational(mats.Y));
  SubspaceBasis imIa = column_space(to_rational(mats.Ia));
  std::size_t other = intersect(kerY, imIa).dim();
  if (other != d.deficiency)
    throw Error("deficiency formulas disagree: " + std::to_string(d.deficiency) + " vs " + std::to_string(other));
  return d;
}

DeficiencyReport deficiency(const GeneralizedNetwork& g) {
  DeficiencyReport d = deficiency(g.base());
  bool complete = true;
  for (std::size_t j = 0; j < g.base().complex_count(); ++j) complete = complete && g.has_kinetic(j);
  if (complete) d.kinetic_deficiency = kinetic_deficiency(g);
  return d;
}

SubspaceBasis kinetic_order_subspace(const GeneralizedNetwork& g) {
  const Network& net = g.base();
  auto p = linkage_classes(net);
  std::vector<RatVec> gens;
  // Complexes without a kinetic complex (product-only ones) are skipped.
  for (const auto& cls : p.classes) {
    std::optional<RatVec> base;
    for (std::size_t j : cls) {
      if (!g.has_kinetic(j)) continue;
      RatVec v = to_rational(g.kinetic_complex(j).coeffs());
      if (!base) {
        base = v;
        continue;
      }
      for (std::size_t s = 0; s < v.size(); ++s) v[s] -= (*base)[s];
      gens.push_back(std::move(v));
    }
  }
  return SubspaceBasis::span_of(net.species_count(), gens);
}

std::size_t kinetic_deficiency(const GeneralizedNetwork& g) {
  const Network& net = g.base();
  for (std::size_t j = 0; j < net.complex_count(); ++j)
    if (!g.has_kinetic(j))
      throw ValidationError("kinetic deficiency needs a kinetic complex for " + net.format(net.complex(j)));
  std::size_t n = net.complex_count();
  std::size_t l = linkage_classes(net).classes.size();
  std::size_t s = kinetic_order_subspace(g).dim();
  return n - l - s;
}

}  // namespace crnt
