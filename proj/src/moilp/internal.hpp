#pragma once

#include "moilp/moilp.hpp"

namespace moilp::detail {

// The solvers only need the region and the objectives, not a full problem
// (single-objective solves may run on regions without x >= 0).
bool has_dominator(const HPolytope& p, const IntMatrix& c, const IntVector& v);
ParetoSet box_search(const HPolytope& p, const IntMatrix& c, const BoxSearchOptions& options, BoxSearchStats* stats);

}  // namespace moilp::detail
