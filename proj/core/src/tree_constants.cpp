#include "crnt/tree_constants.hpp"

#include <algorithm>

#include "crnt/error.hpp"
#include "crnt/graph.hpp"
#include "crnt/linalg.hpp"

namespace crnt {

namespace {

void require_weakly_reversible(const Network& net) {
  if (!is_weakly_reversible(net)) throw HypothesisError("network is not weakly reversible");
}

void check_caps(const Network& net, const std::vector<std::size_t>& cls, const TreeOptions& options) {
  std::size_t edges = 0;
  for (const auto& r : net.reactions())
    if (std::binary_search(cls.begin(), cls.end(), r.reactant)) ++edges;
  if (cls.size() > options.max_class_complexes || edges > options.max_class_edges)
    throw CapExceeded("linkage class with " + std::to_string(cls.size()) + " complexes and " +
                      std::to_string(edges) + " reactions exceeds the tree enumeration cap");
}

// Enumerates i-trees: every non-root node picks one outgoing edge and the
// choice must not close a cycle.
void enumerate(const Network& net, const std::vector<std::size_t>& nodes, std::size_t root,
               const std::vector<std::vector<std::size_t>>& out_edges, std::size_t k,
               std::vector<long>& succ, std::vector<std::size_t>& chosen,
               std::vector<std::vector<std::size_t>>& trees) {
  if (k == nodes.size()) {
    std::vector<std::size_t> t = chosen;
    std::sort(t.begin(), t.end());
    trees.push_back(std::move(t));
    return;
  }
  const std::size_t u = nodes[k];
  if (u == root) {
    enumerate(net, nodes, root, out_edges, k + 1, succ, chosen, trees);
    return;
  }
  for (std::size_t e : out_edges[u]) {
    const std::size_t w = net.reaction(e).product;
    // Follow the successor chain from w; reaching u means a cycle.
    bool cycle = false;
    long x = static_cast<long>(w);
    while (x >= 0) {
      if (static_cast<std::size_t>(x) == u) {
        cycle = true;
        break;
      }
      x = succ[static_cast<std::size_t>(x)];
    }
    if (cycle) continue;
    succ[u] = static_cast<long>(w);
    chosen.push_back(e);
    enumerate(net, nodes, root, out_edges, k + 1, succ, chosen, trees);
    chosen.pop_back();
    succ[u] = -1;
  }
}

Polynomial tree_weight(const Network& net, const std::vector<std::size_t>& tree) {
  Polynomial::Exponents e;
  for (auto r : tree) e.emplace_back(net.reaction(r).rate, 1);
  return Polynomial::monomial(1, e);
}

}  // namespace

std::vector<std::vector<std::size_t>> spanning_i_trees(const Network& net, std::size_t root,
                                                       const TreeOptions& options) {
  if (root >= net.complex_count()) throw ValidationError("complex index out of range");
  require_weakly_reversible(net);
  auto part = linkage_classes(net);
  const auto& nodes = part.classes[part.class_of[root]];
  check_caps(net, nodes, options);
  std::vector<std::vector<std::size_t>> out_edges(net.complex_count());
  for (std::size_t i = 0; i < net.reaction_count(); ++i) out_edges[net.reaction(i).reactant].push_back(i);
  std::vector<long> succ(net.complex_count(), -1);
  std::vector<std::size_t> chosen;
  std::vector<std::vector<std::size_t>> trees;
  enumerate(net, nodes, root, out_edges, 0, succ, chosen, trees);
  std::sort(trees.begin(), trees.end());
  return trees;
}

TreeConstantSet tree_constants(const Network& net, const TreeOptions& options) {
  require_weakly_reversible(net);
  auto part = linkage_classes(net);
  TreeConstantSet out;
  out.linkage_class = part.class_of;
  for (std::size_t i = 0; i < net.complex_count(); ++i) {
    auto trees = spanning_i_trees(net, i, options);
    Polynomial k;
    for (const auto& t : trees) k += tree_weight(net, t);
    out.symbolic.push_back(std::move(k));
    out.tree_count.push_back(trees.size());
  }
  return out;
}

TreeConstantSet tree_constants(const Network& net, const RateMap& rates, const TreeOptions& options) {
  TreeConstantSet out = tree_constants(net, options);
  RatVec values;
  for (const auto& k : out.symbolic) values.push_back(k.eval(rates));
  out.numeric = std::move(values);
  return out;
}

RatVec tree_constants_via_minors(const Network& net, const RateMap& rates) {
  require_weakly_reversible(net);
  auto part = linkage_classes(net);
  RationalMatrix a = kinetic_matrix(net, rates);
  RatVec out(net.complex_count());
  for (const auto& cls : part.classes) {
    const std::size_t q = cls.size();
    for (std::size_t pos = 0; pos < q; ++pos) {
      RationalMatrix minor(q - 1, q - 1);
      std::size_t ri = 0;
      for (std::size_t r = 0; r < q; ++r) {
        if (r == pos) continue;
        std::size_t ci = 0;
        for (std::size_t c = 0; c < q; ++c) {
          if (c == pos) continue;
          minor(ri, ci++) = -a(cls[r], cls[c]);
        }
        ++ri;
      }
      out[cls[pos]] = determinant(minor);
    }
  }
  return out;
}

Matrix<Polynomial> kinetic_matrix_symbolic(const Network& net) {
  Matrix<Polynomial> a(net.complex_count(), net.complex_count());
  for (const auto& r : net.reactions()) {
    Polynomial k = Polynomial::variable(r.rate);
    a(r.product, r.reactant) += k;
    a(r.reactant, r.reactant) -= k;
  }
  return a;
}

std::vector<std::vector<Polynomial>> kernel_vectors(const Network& net, const TreeOptions& options) {
  TreeConstantSet tc = tree_constants(net, options);
  auto part = linkage_classes(net);
  std::vector<std::vector<Polynomial>> out;
  for (const auto& cls : part.classes) {
    std::vector<Polynomial> v(net.complex_count());
    for (auto j : cls) v[j] = tc.symbolic[j];
    out.push_back(std::move(v));
  }
  return out;
}

bool verify_kernel_identity(const Network& net, const TreeOptions& options) {
  Matrix<Polynomial> a = kinetic_matrix_symbolic(net);
  for (const auto& v : kernel_vectors(net, options)) {
    for (const auto& entry : a * v)
      if (!entry.is_zero()) return false;
  }
  return true;
}

}  // namespace crnt
