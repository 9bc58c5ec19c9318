#include "ctv/linear_solve.hpp"

#include "ctv/errors.hpp"

namespace ctv {

LinearSolveResult solve_square(RationalMatrix a, RationalVector b) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) {
    throw PreconditionError("solve_square: dimension mismatch");
  }
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != n) {
      throw PreconditionError("solve_square: matrix not square");
    }
  }

  int det_sign = 1;
  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int i = rank; i < n; ++i) {
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      det_sign = 0;
      continue;
    }
    if (pivot != rank) {
      std::swap(a[pivot], a[rank]);
      std::swap(b[pivot], b[rank]);
      det_sign = -det_sign;
    }
    if (a[rank][col] < 0) {
      det_sign = -det_sign;
    }
    for (int i = rank + 1; i < n; ++i) {
      if (a[i][col] == 0) {
        continue;
      }
      Rational factor = a[i][col] / a[rank][col];
      a[i][col] = 0;
      for (int j = col + 1; j < n; ++j) {
        if (a[rank][j] != 0) {
          a[i][j] -= factor * a[rank][j];
        }
      }
      b[i] -= factor * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  LinearSolveResult out;
  if (rank < n) {
    for (int i = rank; i < n; ++i) {
      if (b[i] != 0) {
        out.status = SolveStatus::Inconsistent;
        return out;
      }
    }
    out.status = SolveStatus::Underdetermined;
    return out;
  }

  out.status = SolveStatus::Unique;
  out.det_sign = det_sign;
  out.solution.assign(n, Rational(0));
  for (int k = n - 1; k >= 0; --k) {
    int col = pivot_col[k];
    Rational acc = b[k];
    for (int j = col + 1; j < n; ++j) {
      if (a[k][j] != 0) {
        acc -= a[k][j] * out.solution[j];
      }
    }
    out.solution[col] = acc / a[k][col];
  }
  return out;
}

}  // namespace ctv
