#ifndef CTV_LINEAR_SOLVE_HPP
#define CTV_LINEAR_SOLVE_HPP

#include <vector>

#include "ctv/rational.hpp"

namespace ctv {

using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct LinearSolveResult {
  SolveStatus status = SolveStatus::Inconsistent;
  RationalVector solution;  // filled only for Unique
  int det_sign = 0;         // sign of det(A); 0 when singular
};

/**
 * Exact Gaussian elimination on a square rational system A x = b.
 * Distinguishes a unique solution (with the determinant sign in the given
 * row/column order) from inconsistent and underdetermined systems.
 */
LinearSolveResult solve_square(RationalMatrix a, RationalVector b);

}  // namespace ctv

#endif  // CTV_LINEAR_SOLVE_HPP
