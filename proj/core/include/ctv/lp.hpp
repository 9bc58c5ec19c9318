#ifndef CTV_LP_HPP
#define CTV_LP_HPP

#include <optional>

#include "ctv/linear_solve.hpp"

namespace ctv {

/**
 * Exact feasibility of { x >= 0 : A x = b } by a phase-1 simplex over the
 * rationals with Bland's rule (smallest-index pivoting), which terminates
 * without anti-cycling heuristics.  Returns a feasible point or nullopt.
 */
std::optional<RationalVector> feasible_point(const RationalMatrix& a,
                                             const RationalVector& b);

}  // namespace ctv

#endif  // CTV_LP_HPP
