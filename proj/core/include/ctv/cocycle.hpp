#ifndef CTV_COCYCLE_HPP
#define CTV_COCYCLE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ctv/chain.hpp"
#include "ctv/configuration_space.hpp"
#include "ctv/linear_solve.hpp"

namespace ctv {

/**
 * Exact evaluator of the obstruction cocycle on facets of the configuration
 * space, for the piecewise-linear test map of the reference point
 * configuration.
 *
 * A facet chooses one vertex per column; the vertex in column c, row i maps
 * to the r x (d+1) matrix whose i-th row is (1, f(v_c)) with all other rows
 * zero, where f places the points of color class b at e_b (e_0 = 0) and the
 * last point at the simplex barycenter.  Subtracting the row average
 * projects modulo the diagonal; in the fixed basis that keeps rows 1..r-1
 * of the centered matrix, the facet's image is an N-simplex in an
 * N-dimensional space, and the signed intersection number with the origin
 * is read off an exact (N+1) x (N+1) linear system: +-1 when the system has
 * a unique all-positive solution (the sign of its determinant, globally
 * normalized so the identity facet evaluates to +1), and 0 when the simplex
 * misses the origin.
 */
class CocycleEvaluator {
 public:
  explicit CocycleEvaluator(const ConfigSpace& cs);

  /**
   * Value in {-1, 0, +1}.  Throws GeneralPositionError when a barycentric
   * coordinate vanishes exactly or the system is underdetermined.
   */
  int evaluate(const FacetCode& fc) const;

  /** Image f(v_c) of the configuration point behind column c (0-indexed). */
  const std::vector<RationalVector>& points() const { return points_; }

 private:
  const ConfigSpace& cs_;
  std::vector<RationalVector> points_;
  int identity_sign_ = 1;
};

/** Sum of coeff * cocycle value over a chain supported on facets. */
Int cocycle_on_chain(const Chain& c, const ConfigSpace& cs);

/**
 * The distinguished chains of the obstruction computation, all built from
 * the d-fold join of orientation cycles on the leading chessboard blocks:
 *
 *   phi            join with the identity placement of the last block plus
 *                  row r in the final column (dimension N);
 *   omega[j-1]     same but row j < r in the final column (dimension N);
 *   theta[i-1]     identity placement missing (i, i), plus row r in the
 *                  final column; theta[r-1] has no final-column vertex
 *                  (dimension N-1);
 *   theta_pair[i-1][j-1]  identity placement missing (i, i), plus row j < r
 *                  in the final column, for i, j in 1..r-1 (dimension N-1).
 */
struct SpecialChains {
  Chain phi;
  std::vector<Chain> omega;
  std::vector<Chain> theta;
  std::vector<std::vector<Chain>> theta_pair;
};

/** Throws BudgetError when the per-chain term count (r!)^d exceeds the budget. */
SpecialChains special_chains(const ConfigSpace& cs, std::uint64_t term_budget = 10'000'000);

struct BoundaryRelationReport {
  bool phi_identity = false;          // boundary of phi decomposes over theta
  std::vector<bool> omega_identity;   // per j: boundary of omega_j decomposes
  std::vector<Simplex> mismatches;    // sample of differing simplices (capped)

  bool all() const;
};

/**
 * Verify, as exact chain identities relative to the non-free subcomplex
 * (boundary terms supported there are dropped):
 *
 *   d phi     = (-1)^{d(r-1)} * sum_i (-1)^{i-1} theta_i
 *   d omega_j = (-1)^{d(r-1)} * ( sum_{i<r} (-1)^{i-1} theta_{i,j}
 *                                 + (-1)^{r-1} theta_r )
 *
 * A non-null `chains` overrides the internally built ones (test seam).
 */
BoundaryRelationReport check_boundary_relations(const ConfigSpace& cs,
                                                const SpecialChains* chains = nullptr);

struct SignClaimReport {
  bool fixed_row_claim = false;  // swap(i, r) fixes theta_{i,j} up to (-1)^d
  bool swap_claim = false;       // swap(j, r) carries theta_{j,j} to (-1)^d theta_j
  std::vector<std::pair<int, int>> failures;  // offending (i, j)

  bool all() const { return fixed_row_claim && swap_claim; }
};

/**
 * Verify the transposition identities used to pin down an equivariant
 * cochain: for i != j the row swap (i r) multiplies theta_{i,j} by (-1)^d,
 * and (j r) carries theta_{j,j} to (-1)^d theta_j.
 */
SignClaimReport check_sign_claims(const ConfigSpace& cs,
                                  const SpecialChains* chains = nullptr);

struct VerdictOptions {
  /** Evaluate the phi/omega chains by exact intersection when their term
      count (r!)^d stays within this budget; otherwise use the closed form. */
  std::uint64_t chain_eval_budget = 10'000;
  /** When positive, also enumerate all (r!)^{d+1} * r facets (within the
      budget) and count nonzero cocycle values. */
  std::uint64_t facet_enum_budget = 0;
};

struct ObstructionVerdict {
  int d = 0;
  int r = 0;
  Int phi_value;                      // cocycle on phi
  bool evaluated = false;             // true: computed; false: closed form
  bool phi_matches_closed_form = true;
  std::vector<Int> omega_values;      // filled when evaluated
  bool divides = false;               // r | (r-1)!^d
  bool extension_exists = false;      // equals `divides`
  std::uint64_t facets_evaluated = 0; // full enumeration, 0 when skipped
  std::int64_t nonzero_facets = -1;
  std::int64_t nonzero_last_row_r = -1;

  bool consistent() const;  // every evaluated quantity matched its closed form
};

/**
 * The divisibility verdict: the equivariant extension exists iff r divides
 * (r-1)!^d.  The cocycle value on phi is computed by exact evaluation when
 * the chain fits the budget and by the closed form (r-1)!^d otherwise; for
 * prime r the verdict is always negative (Wilson).
 */
ObstructionVerdict obstruction_verdict(int d, int r, const VerdictOptions& opts = {});

struct HCheckOptions {
  /** Recompute the cocycle on phi/omega by exact intersection when the
      total facet evaluations stay within this budget. */
  std::uint64_t chain_eval_budget = 100'000;
};

struct HCheckReport {
  Int h_magnitude;                 // (r-1)!^d / r
  std::vector<Int> h_theta;        // assigned values on theta_1..theta_r
  std::vector<Int> h_theta_diag;   // assigned values on theta_{j,j}
  bool boundary_decomposition_ok = false;
  bool h_dphi_matches = false;     // h(d phi) == (r-1)!^d
  bool h_domega_zero = false;      // h(d omega_j) == 0 for all j
  bool cocycle_evaluated = false;  // c_f(phi), c_f(omega_j) recomputed
  bool cocycle_matches = false;

  bool all() const {
    return boundary_decomposition_ok && h_dphi_matches && h_domega_zero &&
           (!cocycle_evaluated || cocycle_matches);
  }
};

/**
 * When r | (r-1)!^d, instantiate the explicit cochain values
 *
 *   h(theta_j)   = +(-1)^{(d+1)(r-1)+j+r} * (r-1)!^d / r
 *   h(theta_jj)  = -(-1)^{(d+1)(r-1)+j+r} * (r-1)!^d / r
 *   h(theta_ij)  = 0   (i != j)
 *
 * and verify the bookkeeping identities h(d phi) = (r-1)!^d = c_f(phi) and
 * h(d omega_j) = 0 = c_f(omega_j), decomposing the boundaries as exact
 * chains.  Throws PreconditionError when r does not divide (r-1)!^d.
 */
HCheckReport explicit_h_check(const ConfigSpace& cs, const HCheckOptions& opts = {},
                              const SpecialChains* chains = nullptr);

/**
 * Evidence that the test map image of the non-free subcomplex misses the
 * diagonal: on every facet of the subcomplex (exhaustively for small cases)
 * the two empty rows force two unequal matrix rows since the first
 * coordinates sum to 1, and on `samples` random sub-simplices with random
 * positive rational weights the image matrix has two unequal rows.
 */
bool check_A_avoids_diagonal(const ConfigSpace& cs, int samples);

}  // namespace ctv

#endif  // CTV_COCYCLE_HPP
