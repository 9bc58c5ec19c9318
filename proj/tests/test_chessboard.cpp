#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "ctv/chessboard.hpp"
#include "ctv/errors.hpp"
#include "ctv/homology.hpp"
#include "ctv/permutation.hpp"

using namespace ctv;

namespace {

// Independent oracle: number of k-rook placements on an r x n board is
// C(n, k) * r! / (r-k)!  (choose columns, then inject into rows).
std::int64_t rook_count(int r, int n, int k) {
  auto binom = [](int a, int b) {
    std::int64_t v = 1;
    for (int i = 1; i <= b; ++i) {
      v = v * (a - i + 1) / i;
    }
    return v;
  };
  std::int64_t v = binom(n, k);
  for (int i = 0; i < k; ++i) {
    v *= r - i;
  }
  return v;
}

}  // namespace

TEST_CASE("chessboard complexes by direct enumeration") {
  Complex b32 = chessboard_complex({3, 2});
  CHECK(b32.num_vertices == 6);
  CHECK(b32.dimension == 1);
  CHECK(f_vector(b32) == std::vector<std::int64_t>{6, 6});
  CHECK(is_pseudomanifold(b32).all());  // a circle

  Complex b21 = chessboard_complex({2, 1});
  CHECK(b21.dimension == 0);
  CHECK(b21.facets.size() == 2);

  Complex b43 = chessboard_complex({4, 3});
  CHECK(f_vector(b43) == std::vector<std::int64_t>{12, 36, 24});

  for (int r = 3; r <= 5; ++r) {
    Complex board = chessboard_complex({r, r - 1});
    auto f = f_vector(board);
    for (int k = 1; k <= r - 1; ++k) {
      CHECK(f[k - 1] == rook_count(r, r - 1, k));
    }
    // r! facets: injections of the r-1 columns into r rows.
    std::int64_t expected = 1;
    for (int i = 2; i <= r; ++i) {
      expected *= i;
    }
    CHECK(static_cast<std::int64_t>(board.facets.size()) == expected);
  }
}

TEST_CASE("boards r x (r-1) are closed orientable pseudomanifolds") {
  for (int r = 3; r <= 5; ++r) {
    auto rep = is_pseudomanifold(chessboard_complex({r, r - 1}));
    INFO("r = " << r);
    CHECK(rep.pure);
    CHECK(rep.ridge_degree_two);
    CHECK(rep.strongly_connected);
    CHECK(rep.orientable);
  }
  // The square board fails the ridge condition (ridges have degree 1).
  auto rep33 = is_pseudomanifold(chessboard_complex({3, 3}));
  CHECK(rep33.pure);
  CHECK_FALSE(rep33.ridge_degree_two);
}

TEST_CASE("orientation cycle is a cycle with the right support") {
  CHECK_THROWS_AS(orientation_cycle(2), PreconditionError);

  Chain z3 = orientation_cycle(3);
  CHECK(z3.dim() == 1);
  CHECK(z3.size() == 6);
  // The identity injection (1,1),(2,2) carries coefficient +1.
  GridLabeling l3{3};
  Simplex identity({l3.id({1, 1}), l3.id({2, 2})});
  CHECK(z3.coefficient(identity) == 1);
  CHECK(boundary(z3).empty());

  Chain z4 = orientation_cycle(4);
  CHECK(z4.size() == 24);
  CHECK(boundary(z4).empty());
  for (const auto& [s, c] : z4.terms()) {
    CHECK((c == 1 || c == -1));
  }

  CHECK(boundary(orientation_cycle(5)).empty());
}

TEST_CASE("row action flips the cycle by the permutation sign") {
  for (int r : {3, 4}) {
    Chain z = orientation_cycle(r);
    GridLabeling labeling{r};
    for (const auto& pi : all_permutations(r)) {
      CHECK(apply_permutation(pi, z, labeling) == Int(pi.sign()) * Chain(z));
    }
  }
  // r = 5 sampled.
  Chain z5 = orientation_cycle(5);
  GridLabeling l5{5};
  auto perms = all_permutations(5);
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& pi = perms[rng() % perms.size()];
    CHECK(apply_permutation(pi, z5, l5) == Int(pi.sign()) * Chain(z5));
  }
}

TEST_CASE("orientation cycle spans the top kernel") {
  // On the hexagon the edge boundary has nullity 1, and z lies in the
  // kernel, so z spans it.
  Complex b32 = chessboard_complex({3, 2});
  auto snf = smith_normal_form(boundary_matrix(b32, 1));
  CHECK(6 - snf.rank == 1);
  CHECK(boundary(orientation_cycle(3)).empty());

  Complex b43 = chessboard_complex({4, 3});
  auto snf4 = smith_normal_form(boundary_matrix(b43, 2));
  CHECK(24 - snf4.rank == 1);
}

TEST_CASE("collapse matching on square boards") {
  auto r3 = collapse_matching(3);
  CHECK(r3.valid);
  CHECK(r3.pairs == 6);
  CHECK(r3.equivariant);
  CHECK(r3.residual_dimension == 1);

  auto r4 = collapse_matching(4);
  CHECK(r4.valid);
  CHECK(r4.pairs == 24);
  CHECK(r4.equivariant);
  CHECK(r4.residual_dimension == 2);

  auto r2 = collapse_matching(2);
  CHECK(r2.valid);
  CHECK(r2.pairs == 2);
  CHECK(r2.equivariant);
  CHECK(r2.residual_dimension == 0);
}
