#ifndef CTV_SIMPLEX_HPP
#define CTV_SIMPLEX_HPP

#include <compare>
#include <utility>
#include <vector>

namespace ctv {

/**
 * An abstract simplex in canonical form: a nonempty, strictly increasing
 * list of vertex ids.
 */
struct Simplex {
  std::vector<int> vertices;

  Simplex() = default;
  /** Requires `verts` strictly increasing and nonempty; validates. */
  explicit Simplex(std::vector<int> verts);

  int dim() const { return static_cast<int>(vertices.size()) - 1; }

  auto operator<=>(const Simplex&) const = default;
};

/**
 * Canonicalize an ordered vertex list into a simplex plus orientation sign:
 * the parity of the sorting permutation.  A repeated vertex yields sign 0
 * (the oriented simplex is degenerate).
 */
std::pair<Simplex, int> orient_simplex(std::vector<int> ordered_vertices);

/** An oriented simplex: canonical simplex plus a sign relative to it. */
struct OrientedSimplex {
  Simplex simplex;
  int sign = 1;  // +1 or -1

  static OrientedSimplex from_ordered(std::vector<int> ordered_vertices);
};

/** Grid label of a vertex in a chessboard-style array: 1-indexed. */
struct GridLabel {
  int row = 0;
  int col = 0;
  auto operator<=>(const GridLabel&) const = default;
};

/**
 * Column-major labeling of an r x n grid: vertex (row i, column j) has
 * id (j-1)*rows + (i-1).  This is the single global vertex order shared by
 * chessboard complexes and their joins: columns left to right, rows
 * ascending within a column.
 */
struct GridLabeling {
  int rows = 0;

  GridLabel label(int id) const { return {id % rows + 1, id / rows + 1}; }
  int id(const GridLabel& l) const { return (l.col - 1) * rows + (l.row - 1); }
};

}  // namespace ctv

#endif  // CTV_SIMPLEX_HPP
