#ifndef CRNT_CONE_HPP
#define CRNT_CONE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "crnt/model.hpp"

namespace crnt {

enum class CurrentKind { Cyclic, Stoichiometric, NotACurrent };

std::string to_string(CurrentKind k);

struct ExtremeCurrent {
  RatVec vector;  ///< coprime nonnegative integers, indexed by reaction
  CurrentKind kind = CurrentKind::Cyclic;
  std::vector<std::size_t> support() const;
};

struct ConeOptions {
  std::size_t max_rays = 200000;  ///< intermediate ray bound before CapExceeded
};

/// Extreme rays of ker(Gamma) intersected with the nonnegative orthant,
/// sorted lexicographically.  Exact double description on a kernel basis.
std::vector<ExtremeCurrent> extreme_currents(const Network& net, const ConeOptions& options = {});

/// Cyclic if Ia v = 0, stoichiometric if only Gamma v = 0, otherwise not a current.
CurrentKind classify_current(const Network& net, const RatVec& v);

}  // namespace crnt

#endif
