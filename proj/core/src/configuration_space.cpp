#include "ctv/configuration_space.hpp"

#include <algorithm>

#include "ctv/errors.hpp"

namespace ctv {

namespace {

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) {
    f *= i;
  }
  return f;
}

}  // namespace

ConfigSpace::ConfigSpace(int d, int r, std::uint64_t facet_budget)
    : d_(d), r_(r), n_((r - 1) * (d + 1)), budget_(facet_budget) {
  if (d < 1 || r < 2) {
    throw PreconditionError("ConfigSpace: requires d >= 1 and r >= 2");
  }
  if (facet_count() > Int(budget_)) {
    throw BudgetError("ConfigSpace: facet count exceeds the enumeration budget");
  }
}

Int ConfigSpace::facet_count() const {
  Int per_block = factorial(r_);  // injections of r-1 columns into r rows
  Int count = r_;
  for (int b = 0; b <= d_; ++b) {
    count *= per_block;
  }
  return count;
}

int ConfigSpace::block_of_column(int col) const {
  if (col < 1 || col > columns()) {
    throw PreconditionError("block_of_column: column out of range");
  }
  return col <= n_ ? (col - 1) / (r_ - 1) : d_ + 1;
}

void ConfigSpace::for_each_facet(const std::function<bool(const FacetCode&)>& fn) const {
  FacetCode fc;
  fc.rows.assign(columns(), 0);
  bool stop = false;
  // Row choices are tried in ascending order at every column, so facet
  // codes come out in lexicographic order.
  std::vector<bool> used(r_ + 1, false);
  std::function<void(int)> rec = [&](int col) {
    if (stop) {
      return;
    }
    if (col > columns()) {
      stop = !fn(fc);
      return;
    }
    bool final_column = col > n_;
    int block_first = final_column ? col : col - ((col - 1) % (r_ - 1));
    std::fill(used.begin(), used.end(), false);
    for (int c = block_first; c < col; ++c) {
      used[fc.rows[c - 1]] = true;
    }
    std::vector<bool> taken = used;
    for (int row = 1; row <= r_ && !stop; ++row) {
      if (!final_column && taken[row]) {
        continue;
      }
      fc.rows[col - 1] = row;
      rec(col + 1);
    }
  };
  rec(1);
}

Simplex ConfigSpace::to_simplex(const FacetCode& fc) const {
  if (!valid_facet_code(fc)) {
    throw PreconditionError("to_simplex: invalid facet code");
  }
  std::vector<int> verts(columns());
  for (int col = 1; col <= columns(); ++col) {
    verts[col - 1] = vertex_id(fc.rows[col - 1], col);
  }
  return Simplex(std::move(verts));
}

FacetCode ConfigSpace::to_facet_code(const Simplex& s) const {
  if (static_cast<int>(s.vertices.size()) != columns()) {
    throw PreconditionError("to_facet_code: not a facet (wrong vertex count)");
  }
  FacetCode fc;
  fc.rows.assign(columns(), 0);
  for (int id : s.vertices) {
    GridLabel l = label(id);
    if (l.col < 1 || l.col > columns() || fc.rows[l.col - 1] != 0) {
      throw PreconditionError("to_facet_code: not one vertex per column");
    }
    fc.rows[l.col - 1] = l.row;
  }
  return fc;
}

bool ConfigSpace::valid_facet_code(const FacetCode& fc) const {
  if (static_cast<int>(fc.rows.size()) != columns()) {
    return false;
  }
  for (int col = 1; col <= columns(); ++col) {
    int row = fc.rows[col - 1];
    if (row < 1 || row > r_) {
      return false;
    }
    if (col <= n_) {
      int block_first = col - ((col - 1) % (r_ - 1));
      for (int c = block_first; c < col; ++c) {
        if (fc.rows[c - 1] == row) {
          return false;
        }
      }
    }
  }
  return true;
}

bool ConfigSpace::is_nonfree(const Simplex& s) const {
  std::vector<bool> row_used(r_ + 1, false);
  for (int id : s.vertices) {
    if (id < 0 || id >= num_vertices()) {
      throw PreconditionError("is_nonfree: vertex id out of range");
    }
    row_used[label(id).row] = true;
  }
  int missing = 0;
  for (int row = 1; row <= r_; ++row) {
    if (!row_used[row]) {
      ++missing;
    }
  }
  return missing >= 2;
}

Complex ConfigSpace::as_complex() const {
  Complex k;
  k.num_vertices = num_vertices();
  k.dimension = n_;
  k.facets.reserve(facet_count().convert_to<std::size_t>());
  for_each_facet([&](const FacetCode& fc) {
    k.facets.push_back(to_simplex(fc));
    return true;
  });
  GridLabeling l = labeling();
  std::vector<GridLabel> labels(k.num_vertices);
  for (int id = 0; id < k.num_vertices; ++id) {
    labels[id] = l.label(id);
  }
  k.labels = std::move(labels);
  return k;
}

}  // namespace ctv
