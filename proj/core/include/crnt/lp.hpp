#ifndef CRNT_LP_HPP
#define CRNT_LP_HPP

#include <optional>

#include "crnt/matrix.hpp"
#include "crnt/rational.hpp"

namespace crnt {

/// Finds some x >= 0 with A x = b, or reports that none exists.  Exact
/// phase-one simplex with Bland's rule, so it always terminates.
std::optional<RatVec> find_nonnegative_solution(const RationalMatrix& a, const RatVec& b);

}  // namespace crnt

#endif
