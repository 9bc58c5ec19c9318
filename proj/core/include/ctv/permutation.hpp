#ifndef CTV_PERMUTATION_HPP
#define CTV_PERMUTATION_HPP

#include <vector>

#include "ctv/chain.hpp"
#include "ctv/complex.hpp"

namespace ctv {

/**
 * An element of the symmetric group S_r acting on rows 1..r.
 * Stored by its image list; the sign is the permutation parity.
 */
class Permutation {
 public:
  /** From the 1-indexed image list (images[i-1] = image of i); validates bijectivity. */
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int r);
  static Permutation transposition(int r, int i, int j);

  int size() const { return static_cast<int>(images_.size()); }
  /** Image of row i, both 1-indexed. */
  int operator()(int i) const { return images_[i - 1]; }
  int sign() const { return sign_; }

  /** (*this) after `other`: (a.compose(b))(i) = a(b(i)). */
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;  // 1-indexed values
  int sign_ = 1;
};

/** All r! permutations, in lexicographic order of image lists. */
std::vector<Permutation> all_permutations(int r);

/**
 * Row action on a labeled chain: every vertex (i, j) is relabeled to
 * (p(i), j), vertex lists are re-canonicalized, and any reordering sign is
 * absorbed into the coefficient.  The labeling must cover every vertex id
 * occurring in the chain.
 */
Chain apply_permutation(const Permutation& p, const Chain& c, const GridLabeling& labeling);

/** Same, reading the labels from a labeled complex; errors if unlabeled. */
Chain apply_permutation(const Permutation& p, const Chain& c, const Complex& k);

}  // namespace ctv

#endif  // CTV_PERMUTATION_HPP
