#include "ctv/chessboard.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "ctv/errors.hpp"
#include "ctv/permutation.hpp"

namespace ctv {

namespace {

// Maximal non-attacking rook placements have min(r, n) rooks: any smaller
// placement leaves a free row and a free column.
void enumerate_facets(int r, int n, std::vector<std::vector<int>>& out) {
  int k = std::min(r, n);
  std::vector<int> cells;
  std::vector<bool> row_used(r + 1, false);
  std::vector<bool> col_used(n + 1, false);

  // Rooks placed column by column when n <= r, row by row otherwise.
  bool by_columns = n <= r;
  auto id = [r](int row, int col) { return (col - 1) * r + (row - 1); };

  std::function<void(int)> rec = [&](int placed) {
    if (placed == k) {
      out.push_back(cells);
      return;
    }
    if (by_columns) {
      int col = placed + 1;
      for (int row = 1; row <= r; ++row) {
        if (row_used[row]) {
          continue;
        }
        row_used[row] = true;
        cells.push_back(id(row, col));
        rec(placed + 1);
        cells.pop_back();
        row_used[row] = false;
      }
    } else {
      int row = placed + 1;
      for (int col = 1; col <= n; ++col) {
        if (col_used[col]) {
          continue;
        }
        col_used[col] = true;
        cells.push_back(id(row, col));
        rec(placed + 1);
        cells.pop_back();
        col_used[col] = false;
      }
    }
  };
  rec(0);
}

Int facet_count_formula(int r, int n) {
  // falling factorial of the larger side over the smaller.
  int k = std::min(r, n);
  int big = std::max(r, n);
  Int count = 1;
  for (int i = 0; i < k; ++i) {
    count *= big - i;
  }
  return count;
}

}  // namespace

Complex chessboard_complex(const ChessboardSpec& spec) {
  if (spec.rows < 2 || spec.cols < 1) {
    throw PreconditionError("chessboard_complex: need r >= 2, n >= 1");
  }
  if (facet_count_formula(spec.rows, spec.cols) > 5'000'000) {
    throw SizeError("chessboard_complex: facet count too large");
  }
  std::vector<std::vector<int>> facets;
  enumerate_facets(spec.rows, spec.cols, facets);

  Complex k;
  k.num_vertices = spec.rows * spec.cols;
  k.facets.reserve(facets.size());
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    k.facets.emplace_back(std::move(f));
  }
  std::sort(k.facets.begin(), k.facets.end());
  k.dimension = std::min(spec.rows, spec.cols) - 1;

  GridLabeling labeling{spec.rows};
  std::vector<GridLabel> labels(k.num_vertices);
  for (int id = 0; id < k.num_vertices; ++id) {
    labels[id] = labeling.label(id);
  }
  k.labels = std::move(labels);
  return k;
}

namespace detail {

Chain rook_cycle(int r) {
  GridLabeling labeling{r};
  Chain z(r - 2);
  std::vector<int> verts(r - 1);
  for (const auto& pi : all_permutations(r)) {
    for (int col = 1; col <= r - 1; ++col) {
      verts[col - 1] = labeling.id({pi(col), col});
    }
    // Column order is the canonical vertex order, so no reordering sign.
    z.add(Simplex(verts), Int(pi.sign()));
  }
  return z;
}

}  // namespace detail

Chain orientation_cycle(int r) {
  if (r < 3) {
    throw PreconditionError("orientation_cycle: requires r >= 3");
  }
  return detail::rook_cycle(r);
}

CollapseReport collapse_matching(int r) {
  if (r < 2) {
    throw PreconditionError("collapse_matching: requires r >= 2");
  }
  Complex board = chessboard_complex({r, r});
  GridLabeling labeling{r};

  CollapseReport rep;
  rep.pairs = static_cast<std::int64_t>(board.facets.size());

  // Pair every facet with the subfacet missing its column-r vertex.
  std::map<Simplex, Simplex> pair_of;  // subfacet -> facet
  bool valid = true;
  for (const auto& facet : board.facets) {
    std::vector<int> sub;
    for (int id : facet.vertices) {
      if (labeling.label(id).col != r) {
        sub.push_back(id);
      }
    }
    Simplex subfacet{sub};
    if (!pair_of.emplace(subfacet, facet).second) {
      valid = false;  // two facets claim the same free face
    }
    // Free-face condition: the subfacet lies in exactly one facet.
    int incidence = 0;
    for (const auto& other : board.facets) {
      if (std::includes(other.vertices.begin(), other.vertices.end(),
                        sub.begin(), sub.end())) {
        ++incidence;
      }
    }
    if (incidence != 1) {
      valid = false;
    }
  }
  rep.valid = valid && static_cast<std::int64_t>(pair_of.size()) == rep.pairs;

  // Equivariance: relabeling rows commutes with deleting the column-r
  // vertex.  Checked mechanically against every transposition generator.
  bool equivariant = true;
  auto relabel = [&](const Simplex& s, const Permutation& p) {
    std::vector<int> mapped;
    mapped.reserve(s.vertices.size());
    for (int id : s.vertices) {
      GridLabel l = labeling.label(id);
      mapped.push_back(labeling.id({p(l.row), l.col}));
    }
    std::sort(mapped.begin(), mapped.end());
    return Simplex{mapped};
  };
  for (int i = 1; i < r && equivariant; ++i) {
    Permutation p = Permutation::transposition(r, i, i + 1);
    for (const auto& [subfacet, facet] : pair_of) {
      Simplex mapped_facet = relabel(facet, p);
      auto it = pair_of.find(relabel(subfacet, p));
      if (it == pair_of.end() || !(it->second == mapped_facet)) {
        equivariant = false;
        break;
      }
    }
  }
  rep.equivariant = equivariant;

  // Dimension of what remains after removing all matched pairs.
  std::set<Simplex> removed;
  for (const auto& [subfacet, facet] : pair_of) {
    removed.insert(subfacet);
    removed.insert(facet);
  }
  rep.residual_dimension = -1;
  for (int dim = board.dimension; dim >= 0 && rep.residual_dimension < 0; --dim) {
    for (const auto& face : faces_of_dimension(board, dim)) {
      if (!removed.contains(face)) {
        rep.residual_dimension = dim;
        break;
      }
    }
  }
  return rep;
}

}  // namespace ctv
