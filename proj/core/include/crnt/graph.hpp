#ifndef CRNT_GRAPH_HPP
#define CRNT_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "crnt/linalg.hpp"
#include "crnt/model.hpp"

namespace crnt {

/// Each class is a sorted list of complex indices; classes are ordered by
/// their smallest member.
struct LinkagePartition {
  std::vector<std::vector<std::size_t>> classes;         ///< undirected components
  std::vector<std::vector<std::size_t>> strong_classes;  ///< strongly connected components
  std::vector<std::size_t> class_of;                     ///< complex -> linkage class
  std::vector<std::size_t> strong_class_of;              ///< complex -> strong class
};

LinkagePartition linkage_classes(const Network& net);

bool is_weakly_reversible(const Network& net);
bool is_reversible(const Network& net);

struct DeficiencyReport {
  std::size_t complexes = 0;        ///< n
  std::size_t linkage_classes = 0;  ///< l
  std::size_t rank = 0;             ///< s = dim S
  std::size_t deficiency = 0;       ///< n - l - s, equal to dim(ker Y cap Im Ia)
  std::optional<std::size_t> kinetic_deficiency;
};

/// Computes the deficiency both ways and throws if they disagree.
DeficiencyReport deficiency(const Network& net);
/// Adds the kinetic deficiency; every complex must carry a kinetic complex.
DeficiencyReport deficiency(const GeneralizedNetwork& net);

SubspaceBasis stoichiometric_subspace(const Network& net);

/// span{ ytilde_i - ytilde_j : complexes i, j in the same linkage class }.
SubspaceBasis kinetic_order_subspace(const GeneralizedNetwork& net);
std::size_t kinetic_deficiency(const GeneralizedNetwork& net);

}  // namespace crnt

#endif
