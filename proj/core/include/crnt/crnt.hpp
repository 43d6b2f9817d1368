#ifndef CRNT_CRNT_HPP
#define CRNT_CRNT_HPP

#include "crnt/cone.hpp"
#include "crnt/error.hpp"
#include "crnt/graph.hpp"
#include "crnt/linalg.hpp"
#include "crnt/lp.hpp"
#include "crnt/matrix.hpp"
#include "crnt/model.hpp"
#include "crnt/polynomial.hpp"
#include "crnt/rational.hpp"
#include "crnt/steady_state.hpp"
#include "crnt/translation.hpp"
#include "crnt/tree_constants.hpp"

#endif
