#include "support/oracles.hpp"

#include <functional>

#include "ctv/errors.hpp"

namespace ctv::testing {

using ctv::Rational;

namespace {

// Solve A_S x = b exactly for a column subset S; true when the subset's
// columns are independent, the system is consistent, and x >= 0.
bool subset_solves(const std::vector<std::vector<Rational>>& a,
                   const std::vector<Rational>& b, const std::vector<int>& cols) {
  const int m = static_cast<int>(a.size());
  const int k = static_cast<int>(cols.size());
  std::vector<std::vector<Rational>> w(m, std::vector<Rational>(k + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) {
      w[i][j] = a[i][cols[j]];
    }
    w[i][k] = b[i];
  }
  // Forward elimination without row swaps beyond the search for a pivot.
  int row = 0;
  std::vector<int> pivot_rows;
  for (int col = 0; col < k; ++col) {
    int p = -1;
    for (int i = row; i < m; ++i) {
      if (w[i][col] != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) {
      return false;  // dependent columns: a smaller subset covers this case
    }
    std::swap(w[p], w[row]);
    for (int i = 0; i < m; ++i) {
      if (i == row || w[i][col] == 0) {
        continue;
      }
      Rational f = w[i][col] / w[row][col];
      for (int j = col; j <= k; ++j) {
        w[i][j] -= f * w[row][j];
      }
    }
    pivot_rows.push_back(row);
    ++row;
  }
  // Consistency: the eliminated rows must have zero right-hand side.
  for (int i = row; i < m; ++i) {
    if (w[i][k] != 0) {
      return false;
    }
  }
  for (int j = 0; j < k; ++j) {
    Rational x = w[j][k] / w[j][j];
    if (x < 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool hulls_intersect_oracle(const std::vector<std::vector<ctv::RationalPoint>>& parts) {
  int d = static_cast<int>(parts.at(0).at(0).coords.size());
  const int r = static_cast<int>(parts.size());
  std::vector<int> offset(r + 1, 0);
  for (int i = 0; i < r; ++i) {
    offset[i + 1] = offset[i] + static_cast<int>(parts[i].size());
  }
  const int n = offset[r];
  const int m = r + d * (r - 1);
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n, Rational(0)));
  std::vector<Rational> b(m, Rational(0));
  for (int i = 0; i < r; ++i) {
    for (int k = 0; k < static_cast<int>(parts[i].size()); ++k) {
      a[i][offset[i] + k] = 1;
    }
    b[i] = 1;
  }
  int row = r;
  for (int i = 1; i < r; ++i) {
    for (int t = 0; t < d; ++t, ++row) {
      for (int k = 0; k < static_cast<int>(parts[0].size()); ++k) {
        a[row][offset[0] + k] = parts[0][k].coords[t];
      }
      for (int k = 0; k < static_cast<int>(parts[i].size()); ++k) {
        a[row][offset[i] + k] = -parts[i][k].coords[t];
      }
    }
  }

  // Every nonempty column subset, smallest first.
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> cols;
    for (int j = 0; j < n; ++j) {
      if (mask & (1u << j)) {
        cols.push_back(j);
      }
    }
    if (static_cast<int>(cols.size()) > m) {
      continue;
    }
    if (subset_solves(a, b, cols)) {
      return true;
    }
  }
  return false;
}

std::set<ctv::RainbowPartition> rainbow_partitions_oracle(
    const ctv::ColoredConfiguration& cfg, int r, bool use_all_points) {
  std::vector<ctv::PointRef> points;
  for (int cls = 0; cls < static_cast<int>(cfg.classes.size()); ++cls) {
    for (int idx = 0; idx < static_cast<int>(cfg.classes[cls].size()); ++idx) {
      points.push_back({cls, idx});
    }
  }
  const int total = static_cast<int>(points.size());
  std::set<ctv::RainbowPartition> out;
  std::vector<int> assignment(total, 0);  // 0 = unused, 1..r = part

  std::function<void(int)> rec = [&](int idx) {
    if (idx == total) {
      ctv::RainbowPartition p;
      p.parts.assign(r, {});
      for (int i = 0; i < total; ++i) {
        if (assignment[i] > 0) {
          p.parts[assignment[i] - 1].push_back(points[i]);
        }
      }
      for (const auto& part : p.parts) {
        if (part.empty()) {
          return;
        }
      }
      p.canonicalize();
      out.insert(p);
      return;
    }
    for (int choice = use_all_points ? 1 : 0; choice <= r; ++choice) {
      if (choice > 0) {
        bool clash = false;
        for (int i = 0; i < idx; ++i) {
          if (assignment[i] == choice && points[i].cls == points[idx].cls) {
            clash = true;
            break;
          }
        }
        if (clash) {
          continue;
        }
      }
      assignment[idx] = choice;
      rec(idx + 1);
    }
    assignment[idx] = 0;
  };
  rec(0);
  return out;
}

}  // namespace ctv::testing
