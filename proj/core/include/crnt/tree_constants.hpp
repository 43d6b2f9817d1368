#ifndef CRNT_TREE_CONSTANTS_HPP
#define CRNT_TREE_CONSTANTS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "crnt/matrix.hpp"
#include "crnt/model.hpp"
#include "crnt/polynomial.hpp"

namespace crnt {

struct TreeOptions {
  std::size_t max_class_complexes = 12;
  std::size_t max_class_edges = 24;
};

/// Spanning trees of the linkage class of `root` directed towards `root`.
/// Each tree is the sorted list of its reaction indices.  Requires weak
/// reversibility; throws CapExceeded beyond the configured class size.
std::vector<std::vector<std::size_t>> spanning_i_trees(const Network& net, std::size_t root,
                                                       const TreeOptions& options = {});

struct TreeConstantSet {
  std::vector<Polynomial> symbolic;      ///< K_i in the rate symbols
  std::vector<std::size_t> tree_count;   ///< number of i-trees per complex
  std::vector<std::size_t> linkage_class;
  std::optional<RatVec> numeric;         ///< K_i at the given rates
};

TreeConstantSet tree_constants(const Network& net, const TreeOptions& options = {});
TreeConstantSet tree_constants(const Network& net, const RateMap& rates, const TreeOptions& options = {});

/// K_i as the principal minor det(-A_k) of the class Laplacian with row and
/// column i removed.  Independent of tree enumeration.
RatVec tree_constants_via_minors(const Network& net, const RateMap& rates);

Matrix<Polynomial> kinetic_matrix_symbolic(const Network& net);

/// One vector per linkage class: the tree constants on that class, zero
/// elsewhere.  Together they span ker(A_k) for weakly reversible networks.
std::vector<std::vector<Polynomial>> kernel_vectors(const Network& net, const TreeOptions& options = {});

/// Checks A_k K = 0 for every kernel vector as a polynomial identity.
bool verify_kernel_identity(const Network& net, const TreeOptions& options = {});

}  // namespace crnt

#endif
