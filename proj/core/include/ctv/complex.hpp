#ifndef CTV_COMPLEX_HPP
#define CTV_COMPLEX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ctv/simplex.hpp"

namespace ctv {

/**
 * A finite simplicial complex stored by its facets (maximal simplices),
 * with a global vertex order 0..num_vertices-1.  Chessboard-derived
 * complexes additionally carry (row, column) labels per vertex.
 */
struct Complex {
  int num_vertices = 0;
  std::vector<Simplex> facets;  // canonical, maximal, sorted
  int dimension = -1;
  std::optional<std::vector<GridLabel>> labels;  // indexed by vertex id
};

/**
 * Build a complex from facet candidate lists.  Vertex lists are
 * canonicalized (sorted, duplicates rejected) and non-maximal entries are
 * pruned.  Throws PreconditionError on an empty facet list or an
 * out-of-range vertex id.
 */
Complex make_complex(int num_vertices, const std::vector<std::vector<int>>& facets);

/**
 * Join of complexes: facets are unions of one facet from each factor, with
 * `b`'s vertex ids shifted past `a`'s.  When both factors carry grid labels
 * with the same row count, the joined complex is labeled with `b`'s columns
 * shifted past `a`'s (the left-to-right array convention); otherwise labels
 * are dropped.
 */
Complex join(const Complex& a, const Complex& b);

/** All faces of the given dimension, sorted. */
std::vector<Simplex> faces_of_dimension(const Complex& k, int dim);

/** Number of faces per dimension 0..dimension. */
std::vector<std::int64_t> f_vector(const Complex& k);

/** Membership test against the facet closure. */
bool complex_contains(const Complex& k, const Simplex& s);

struct PseudomanifoldReport {
  bool pure = false;
  bool ridge_degree_two = false;
  bool strongly_connected = false;
  bool orientable = false;

  bool all() const { return pure && ridge_degree_two && strongly_connected && orientable; }
};

/**
 * Check the closed-pseudomanifold conditions: purity, every ridge in
 * exactly two facets, connectivity of the facet-ridge graph, and existence
 * of a consistent facet orientation (propagated with signs across degree-2
 * ridges).
 */
PseudomanifoldReport is_pseudomanifold(const Complex& k);

}  // namespace ctv

#endif  // CTV_COMPLEX_HPP
