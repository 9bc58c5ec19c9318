#ifndef CTV_HOMOLOGY_HPP
#define CTV_HOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include "ctv/complex.hpp"
#include "ctv/rational.hpp"

namespace ctv {

using IntMatrix = std::vector<std::vector<Int>>;

struct SmithResult {
  std::vector<Int> diagonal;  // nonnegative, d_i | d_{i+1}, zeros trailing
  int rank = 0;               // number of nonzero diagonal entries
};

/** Smith normal form diagonal of an integer matrix (destructive copy). */
SmithResult smith_normal_form(IntMatrix m);

/**
 * Boundary matrix of the complex in dimension `dim`: rows indexed by the
 * sorted (dim-1)-faces, columns by the sorted dim-faces, entries the
 * alternating boundary signs.  For dim 0 an empty 0 x f_0 matrix.
 */
IntMatrix boundary_matrix(const Complex& k, int dim);

struct HomologyGroup {
  std::int64_t betti = 0;
  std::vector<Int> torsion;  // invariant factors > 1, divisibility order

  bool operator==(const HomologyGroup&) const = default;
};

/**
 * Integer homology of the full complex at one dimension, via Smith normal
 * forms of the two adjacent boundary matrices.  Exact arithmetic
 * throughout.  Throws PreconditionError for a dimension out of range and
 * SizeError when the face counts in the relevant dimensions exceed
 * `max_faces` (Smith reduction is cubic; this keeps requests desk-scale).
 */
HomologyGroup homology(const Complex& k, int dim, std::size_t max_faces = 100000);

}  // namespace ctv

#endif  // CTV_HOMOLOGY_HPP
