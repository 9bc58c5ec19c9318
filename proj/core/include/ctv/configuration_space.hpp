#ifndef CTV_CONFIGURATION_SPACE_HPP
#define CTV_CONFIGURATION_SPACE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "ctv/complex.hpp"
#include "ctv/rational.hpp"
#include "ctv/simplex.hpp"

namespace ctv {

/**
 * A facet of the combinatorial configuration space, encoded as the chosen
 * row (1..r) in each of the N+1 columns.  Within each chessboard block the
 * rows are pairwise distinct.
 */
struct FacetCode {
  std::vector<int> rows;

  auto operator<=>(const FacetCode&) const = default;
};

inline constexpr std::uint64_t kDefaultFacetBudget = 10'000'000;

/**
 * The combinatorial configuration space: the join of d+1 chessboard
 * complexes on r rows and r-1 columns with a final discrete column of r
 * points, laid out left to right on an r x (N+1) array, N = (r-1)(d+1).
 * The row action of S_r permutes the rows of the array.
 *
 * Facets pick one vertex per column and are enumerable lazily in
 * lexicographic FacetCode order; the full complex is materialized only on
 * request.
 */
class ConfigSpace {
 public:
  /**
   * Throws BudgetError when the facet count (r!)^(d+1) * r exceeds
   * `facet_budget`, and PreconditionError for d < 1 or r < 2.
   */
  ConfigSpace(int d, int r, std::uint64_t facet_budget = kDefaultFacetBudget);

  int d() const { return d_; }
  int r() const { return r_; }
  int n() const { return n_; }                       // N = (r-1)(d+1)
  int columns() const { return n_ + 1; }
  int num_vertices() const { return r_ * columns(); }

  Int facet_count() const;                           // (r!)^(d+1) * r

  GridLabeling labeling() const { return {r_}; }
  int vertex_id(int row, int col) const { return (col - 1) * r_ + (row - 1); }
  GridLabel label(int id) const { return labeling().label(id); }

  /** Chessboard block 0..d of a column, or d+1 for the final column. */
  int block_of_column(int col) const;

  /** Enumerate facet codes lexicographically; stop when fn returns false. */
  void for_each_facet(const std::function<bool(const FacetCode&)>& fn) const;

  Simplex to_simplex(const FacetCode& fc) const;
  /** Inverse of to_simplex; requires one vertex in every column. */
  FacetCode to_facet_code(const Simplex& s) const;

  bool valid_facet_code(const FacetCode& fc) const;

  /**
   * Whether the simplex lies in the non-free subcomplex: at least two of
   * the r rows contain none of its vertices.
   */
  bool is_nonfree(const Simplex& s) const;

  /** Materialize the full complex (facet list); budget-guarded. */
  Complex as_complex() const;

 private:
  int d_ = 0;
  int r_ = 0;
  int n_ = 0;
  std::uint64_t budget_ = kDefaultFacetBudget;
};

}  // namespace ctv

#endif  // CTV_CONFIGURATION_SPACE_HPP
