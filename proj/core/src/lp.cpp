#include "ctv/lp.hpp"

#include "ctv/errors.hpp"

namespace ctv {

namespace {

Int lcm_int(const Int& a, const Int& b) {
  Int g = gcd(a, b);
  return a / g * b;
}

}  // namespace

std::optional<RationalVector> feasible_point(const RationalMatrix& a,
                                             const RationalVector& b) {
  const int m = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != m) {
    throw PreconditionError("feasible_point: dimension mismatch");
  }
  const int n = m > 0 ? static_cast<int>(a[0].size()) : 0;

  // Phase-1 simplex with integer pivoting: the whole tableau, objective
  // row included, is an integer matrix over a positive running denominator
  // (the previous pivot), so every update divides exactly and no per-entry
  // gcd normalization is paid.  Bland's rule guarantees termination.
  const int width = n + m + 1;
  const int objrow = m;
  std::vector<std::vector<Int>> t(m + 1, std::vector<Int>(width, Int(0)));
  Int den = 1;
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(a[i].size()) != n) {
      throw PreconditionError("feasible_point: ragged matrix");
    }
    // Scale the row to integers with a nonnegative right-hand side; the
    // artificial variable is added after scaling with coefficient 1.
    Int scale = 1;
    for (int j = 0; j < n; ++j) {
      scale = lcm_int(scale, denominator(a[i][j]));
    }
    scale = lcm_int(scale, denominator(b[i]));
    if (b[i] < 0) {
      scale = -scale;
    }
    for (int j = 0; j < n; ++j) {
      t[i][j] = numerator(a[i][j]) * (scale / denominator(a[i][j]));
    }
    t[i][n + i] = 1;
    t[i][width - 1] = numerator(b[i]) * (scale / denominator(b[i]));
  }
  // Reduced costs of min(sum of artificials) under the artificial basis.
  for (int j = 0; j < width; ++j) {
    for (int i = 0; i < m; ++i) {
      t[objrow][j] -= t[i][j];
    }
  }
  for (int i = 0; i < m; ++i) {
    t[objrow][n + i] = 0;
  }

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    basis[i] = n + i;
  }

  while (true) {
    // Bland: entering column = smallest index with negative reduced cost.
    int q = -1;
    for (int j = 0; j < n + m; ++j) {
      if (t[objrow][j] < 0) {
        q = j;
        break;
      }
    }
    if (q < 0) {
      break;
    }
    // Ratio test on T[i][rhs] / T[i][q]; ties break to the smallest basis
    // variable index.
    int p = -1;
    for (int i = 0; i < m; ++i) {
      if (t[i][q] <= 0) {
        continue;
      }
      if (p < 0) {
        p = i;
        continue;
      }
      Int lhs = t[i][width - 1] * t[p][q];
      Int rhs = t[p][width - 1] * t[i][q];
      if (lhs < rhs || (lhs == rhs && basis[i] < basis[p])) {
        p = i;
      }
    }
    if (p < 0) {
      throw Error("feasible_point: unbounded phase-1 objective");
    }
    const Int pivot = t[p][q];
    for (int i = 0; i <= m; ++i) {
      if (i == p) {
        continue;
      }
      const Int factor = t[i][q];
      for (int j = 0; j < width; ++j) {
        t[i][j] = (t[i][j] * pivot - factor * t[p][j]) / den;
      }
    }
    basis[p] = q;
    den = pivot;
  }

  // Feasible iff every artificial sits at zero; nonbasic ones already do.
  for (int i = 0; i < m; ++i) {
    if (basis[i] >= n && t[i][width - 1] != 0) {
      return std::nullopt;
    }
  }
  RationalVector x(n, Rational(0));
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) {
      x[basis[i]] = Rational(t[i][width - 1], den);
    }
  }
  return x;
}

}  // namespace ctv
