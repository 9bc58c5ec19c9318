#ifndef CTV_CHAIN_HPP
#define CTV_CHAIN_HPP

#include <map>
#include <vector>

#include "ctv/rational.hpp"
#include "ctv/simplex.hpp"

namespace ctv {

/**
 * A formal integer combination of simplices of one dimension, stored
 * sparsely and keyed by canonical simplex.  Orientation signs are folded
 * into the coefficients, so equal chains have equal representations.
 * Zero coefficients are never stored.
 */
class Chain {
 public:
  Chain() = default;
  explicit Chain(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const std::map<Simplex, Int>& terms() const { return terms_; }

  /** Coefficient of a canonical simplex (0 if absent). */
  Int coefficient(const Simplex& s) const;

  /**
   * Add coeff * simplex.  The simplex must have dimension dim(); on a
   * default-constructed chain the first term fixes the dimension.
   */
  void add(const Simplex& s, const Int& coeff);

  /** Add coeff * (ordered vertex list), canonicalizing with sign. */
  void add_ordered(std::vector<int> ordered_vertices, const Int& coeff);

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain& operator*=(const Int& scalar);

  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(const Int& s, Chain c) { return c *= s; }

  bool operator==(const Chain& other) const;

 private:
  int dim_ = -1;
  std::map<Simplex, Int> terms_;
};

/**
 * The alternating-sign simplicial boundary, extended linearly.  For a
 * 0-dimensional chain the boundary lives in augmentation degree; an empty
 * chain of dimension -1 is returned as the flag for that case.
 */
Chain boundary(const Chain& c);

/**
 * Join of chains: every simplex of `a` concatenated with every simplex of
 * `b`, with `b`'s vertex ids shifted by `shift`.  All of `a`'s ids must be
 * below the shifted range, so concatenation is already canonical and the
 * coefficient is just the product.
 */
Chain join_chains(const Chain& a, const Chain& b, int shift);

}  // namespace ctv

#endif  // CTV_CHAIN_HPP
