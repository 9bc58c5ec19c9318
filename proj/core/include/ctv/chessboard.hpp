#ifndef CTV_CHESSBOARD_HPP
#define CTV_CHESSBOARD_HPP

#include <cstdint>

#include "ctv/chain.hpp"
#include "ctv/complex.hpp"

namespace ctv {

/** Parameters of the r x n chessboard complex. */
struct ChessboardSpec {
  int rows = 0;  // r >= 2
  int cols = 0;  // n >= 1
};

/**
 * The chessboard complex: vertices are the grid cells (i, j), simplices the
 * non-attacking rook placements, facets the maximal ones.  Vertices carry
 * grid labels in the column-major global order.
 */
Complex chessboard_complex(const ChessboardSpec& spec);

/**
 * The orientation cycle of the (r-2)-dimensional pseudomanifold
 * Delta_{r,r-1}: the signed sum over all row injections of the facet that
 * places row pi(j) in column j, with coefficient sgn(pi).  Requires r >= 3.
 */
Chain orientation_cycle(int r);

struct CollapseReport {
  bool valid = false;           // every paired subfacet is a free face
  std::int64_t pairs = 0;       // r!
  bool equivariant = false;     // pairing commutes with the row action
  int residual_dimension = -1;  // dimension left after removing all pairs
};

/**
 * The facet/free-face matching on the square board Delta_{r,r}: each facet
 * (a permutation placement) is paired with the subfacet obtained by
 * deleting its column-r vertex.  Checks the free-face condition by direct
 * incidence counting, equivariance under the row action, and the dimension
 * of the complex that remains after removing all pairs.
 */
CollapseReport collapse_matching(int r);

namespace detail {
/** Signed injection cycle for any r >= 2 (r = 2 gives the reduced 0-cycle). */
Chain rook_cycle(int r);
}  // namespace detail

}  // namespace ctv

#endif  // CTV_CHESSBOARD_HPP
