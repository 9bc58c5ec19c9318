#include <algorithm>
#include <cstdlib>

#include "ctv/homology.hpp"

namespace ctv {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SmithResult smith_normal_form(IntMatrix m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows > 0 ? static_cast<int>(m[0].size()) : 0;
  const int limit = std::min(rows, cols);

  int t = 0;
  for (; t < limit; ++t) {
    // Smallest-magnitude pivot in the remaining submatrix.
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < rows; ++i) {
      for (int j = t; j < cols; ++j) {
        if (m[i][j] == 0) {
          continue;
        }
        Int a = abs_int(m[i][j]);
        if (pi < 0 || a < best) {
          pi = i;
          pj = j;
          best = a;
        }
      }
    }
    if (pi < 0) {
      break;  // submatrix is zero
    }
    std::swap(m[t], m[pi]);
    if (pj != t) {
      for (int i = 0; i < rows; ++i) {
        std::swap(m[i][t], m[i][pj]);
      }
    }

    while (true) {
      bool clean = true;
      // Clear the pivot column; a nonzero remainder becomes the new,
      // strictly smaller pivot.
      for (int i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) {
          continue;
        }
        Int q = m[i][t] / m[t][t];
        if (q != 0) {
          for (int j = t; j < cols; ++j) {
            m[i][j] -= q * m[t][j];
          }
        }
        if (m[i][t] != 0) {
          std::swap(m[i], m[t]);
          clean = false;
        }
      }
      if (!clean) {
        continue;
      }
      // Clear the pivot row.
      for (int j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) {
          continue;
        }
        Int q = m[t][j] / m[t][t];
        if (q != 0) {
          for (int i = t; i < rows; ++i) {
            m[i][j] -= q * m[i][t];
          }
        }
        if (m[t][j] != 0) {
          for (int i = 0; i < rows; ++i) {
            std::swap(m[i][j], m[i][t]);
          }
          clean = false;
        }
      }
      if (!clean) {
        continue;
      }
      // Invariant-factor condition: the pivot must divide the whole
      // remaining submatrix; fold an offending row into the pivot row.
      int bi = -1;
      for (int i = t + 1; i < rows && bi < 0; ++i) {
        for (int j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            bi = i;
            break;
          }
        }
      }
      if (bi < 0) {
        break;
      }
      for (int j = t; j < cols; ++j) {
        m[t][j] += m[bi][j];
      }
    }
  }

  SmithResult out;
  out.rank = t;
  out.diagonal.resize(limit, 0);
  for (int i = 0; i < t; ++i) {
    out.diagonal[i] = abs_int(m[i][i]);
  }
  return out;
}

}  // namespace ctv
