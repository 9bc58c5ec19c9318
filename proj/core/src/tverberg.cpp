#include "ctv/tverberg.hpp"

#include <algorithm>
#include <random>

#include "ctv/errors.hpp"
#include "ctv/lp.hpp"

namespace ctv {

namespace {

bool is_prime(int n) {
  if (n < 2) {
    return false;
  }
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      return false;
    }
  }
  return true;
}

// Necessary condition for intersecting hulls, used to gate the exact LP:
// the parts' coordinate ranges must overlap in every coordinate.
bool bounding_boxes_share_point(const std::vector<std::vector<RationalPoint>>& parts) {
  if (parts.empty() || parts[0].empty()) {
    return true;  // let the exact test report the precondition violation
  }
  const int d = parts[0][0].dim();
  for (int t = 0; t < d; ++t) {
    const Rational* lo = nullptr;
    const Rational* hi = nullptr;
    for (const auto& part : parts) {
      const Rational* pmin = &part[0].coords[t];
      const Rational* pmax = pmin;
      for (const auto& p : part) {
        if (p.coords[t] < *pmin) {
          pmin = &p.coords[t];
        }
        if (p.coords[t] > *pmax) {
          pmax = &p.coords[t];
        }
      }
      if (lo == nullptr || *pmin > *lo) {
        lo = pmin;
      }
      if (hi == nullptr || *pmax < *hi) {
        hi = pmax;
      }
    }
    if (*lo > *hi) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::optional<Witness> hulls_intersect(const std::vector<std::vector<RationalPoint>>& parts) {
  if (parts.empty()) {
    throw PreconditionError("hulls_intersect: no parts");
  }
  int d = -1;
  for (const auto& part : parts) {
    if (part.empty()) {
      throw PreconditionError("hulls_intersect: empty part");
    }
    for (const auto& p : part) {
      if (d < 0) {
        d = p.dim();
      } else if (p.dim() != d) {
        throw PreconditionError("hulls_intersect: ambient dimension mismatch");
      }
    }
  }
  const int r = static_cast<int>(parts.size());

  // Variables: convex coefficients per part, concatenated.  Constraints:
  // each part's coefficients sum to 1, and part i reproduces the same
  // point as part 1 in every coordinate.
  std::vector<int> offset(r + 1, 0);
  for (int i = 0; i < r; ++i) {
    offset[i + 1] = offset[i] + static_cast<int>(parts[i].size());
  }
  const int n = offset[r];
  const int m = r + d * (r - 1);
  RationalMatrix a(m, RationalVector(n, Rational(0)));
  RationalVector b(m, Rational(0));
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

  auto x = feasible_point(a, b);
  if (!x) {
    return std::nullopt;
  }
  Witness w;
  w.barycentrics.resize(r);
  for (int i = 0; i < r; ++i) {
    w.barycentrics[i].assign(x->begin() + offset[i], x->begin() + offset[i + 1]);
  }
  w.point.coords.assign(d, Rational(0));
  for (int k = 0; k < static_cast<int>(parts[0].size()); ++k) {
    for (int t = 0; t < d; ++t) {
      w.point.coords[t] += w.barycentrics[0][k] * parts[0][k].coords[t];
    }
  }
  return w;
}

bool witness_valid(const Witness& w, const std::vector<std::vector<RationalPoint>>& parts) {
  if (w.barycentrics.size() != parts.size()) {
    return false;
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& coeffs = w.barycentrics[i];
    if (coeffs.size() != parts[i].size()) {
      return false;
    }
    Rational sum = 0;
    for (const auto& c : coeffs) {
      if (c < 0) {
        return false;
      }
      sum += c;
    }
    if (sum != 1) {
      return false;
    }
    for (int t = 0; t < w.point.dim(); ++t) {
      Rational acc = 0;
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        acc += coeffs[k] * parts[i][k].coords[t];
      }
      if (acc != w.point.coords[t]) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<RationalPoint>> partition_points(const ColoredConfiguration& cfg,
                                                         const RainbowPartition& p) {
  std::vector<std::vector<RationalPoint>> out;
  out.reserve(p.parts.size());
  for (const auto& part : p.parts) {
    std::vector<RationalPoint> pts;
    pts.reserve(part.size());
    for (const auto& ref : part) {
      pts.push_back(cfg.point(ref.cls, ref.index));
    }
    out.push_back(std::move(pts));
  }
  return out;
}

ColoredConfiguration reference_configuration(int d, int r) {
  if (d < 1 || r < 2) {
    throw PreconditionError("reference_configuration: requires d >= 1 and r >= 2");
  }
  ColoredConfiguration cfg;
  cfg.d = d;
  for (int cls = 0; cls <= d; ++cls) {
    RationalPoint p;
    p.coords.assign(d, Rational(0));
    if (cls >= 1) {
      p.coords[cls - 1] = 1;
    }
    cfg.classes.emplace_back(r - 1, p);
  }
  RationalPoint center;
  center.coords.assign(d, Rational(1, d + 1));
  cfg.classes.push_back({center});
  return cfg;
}

void enumerate_rainbow_partitions(const ColoredConfiguration& cfg, int r,
                                  const EnumerationOptions& opts,
                                  const std::function<bool(const RainbowPartition&)>& fn) {
  if (r < 2) {
    throw PreconditionError("enumerate_rainbow_partitions: requires r >= 2");
  }
  std::vector<PointRef> points;
  for (int cls = 0; cls < static_cast<int>(cfg.classes.size()); ++cls) {
    for (int idx = 0; idx < static_cast<int>(cfg.classes[cls].size()); ++idx) {
      points.push_back({cls, idx});
    }
  }
  const int total = static_cast<int>(points.size());
  const int num_classes = static_cast<int>(cfg.classes.size());

  RainbowPartition current;
  std::vector<std::vector<bool>> class_used;  // per part, per class
  std::uint64_t emitted = 0;
  bool stop = false;

  // Canonical (unordered) enumeration: each point joins an existing part,
  // opens the next part, or stays unused; parts appear in first-use order,
  // which sorts them by smallest member.
  std::function<void(int)> rec = [&](int idx) {
    if (stop) {
      return;
    }
    int used = static_cast<int>(current.parts.size());
    if (used + (total - idx) < r) {
      return;  // not enough points left to populate r parts
    }
    if (idx == total) {
      if (used != r) {
        return;
      }
      if (++emitted > opts.budget) {
        throw BudgetError("enumerate_rainbow_partitions: budget exceeded");
      }
      stop = !fn(current);
      return;
    }
    const PointRef p = points[idx];
    for (int part = 0; part < used && !stop; ++part) {
      if (class_used[part][p.cls]) {
        continue;
      }
      class_used[part][p.cls] = true;
      current.parts[part].push_back(p);
      rec(idx + 1);
      current.parts[part].pop_back();
      class_used[part][p.cls] = false;
    }
    if (used < r && !stop) {
      current.parts.push_back({p});
      class_used.emplace_back(num_classes, false);
      class_used.back()[p.cls] = true;
      rec(idx + 1);
      current.parts.pop_back();
      class_used.pop_back();
    }
    if (!opts.use_all_points && !stop) {
      rec(idx + 1);
    }
  };
  rec(0);
}

std::optional<std::pair<RainbowPartition, Witness>> find_rainbow_partition(
    const ColoredConfiguration& cfg, int r, const EnumerationOptions& opts) {
  std::optional<std::pair<RainbowPartition, Witness>> found;
  enumerate_rainbow_partitions(cfg, r, opts, [&](const RainbowPartition& p) {
    auto pts = partition_points(cfg, p);
    if (!bounding_boxes_share_point(pts)) {
      return true;
    }
    auto witness = hulls_intersect(pts);
    if (witness) {
      found = {p, *witness};
      return false;
    }
    return true;
  });
  return found;
}

std::int64_t count_tverberg_partitions(const ColoredConfiguration& cfg, int r,
                                       const EnumerationOptions& opts) {
  EnumerationOptions all = opts;
  all.use_all_points = true;
  std::int64_t count = 0;
  enumerate_rainbow_partitions(cfg, r, all, [&](const RainbowPartition& p) {
    auto pts = partition_points(cfg, p);
    if (bounding_boxes_share_point(pts) && hulls_intersect(pts)) {
      ++count;
    }
    return true;
  });
  return count;
}

PadReduction pad_reduction(const ColoredConfiguration& cfg, int r) {
  const int num_classes = static_cast<int>(cfg.classes.size());
  const int n = (r - 1) * (cfg.d + 1);
  if (num_classes < cfg.d + 2) {
    throw PreconditionError("pad_reduction: need at least d+2 classes");
  }
  if (cfg.total() != n + 1) {
    throw PreconditionError("pad_reduction: configuration must have N+1 points");
  }
  for (const auto& c : cfg.classes) {
    if (static_cast<int>(c.size()) > r - 1) {
      throw PreconditionError("pad_reduction: class size exceeds r-1");
    }
  }
  if (cfg.classes.back().size() != 1) {
    throw PreconditionError("pad_reduction: last class must be a singleton");
  }

  const int m = num_classes - 1;   // classes to top up
  const int new_d = m - 1;         // ambient dimension after padding
  PadReduction out;
  out.original_d = cfg.d;
  for (const auto& c : cfg.classes) {
    out.original_sizes.push_back(static_cast<int>(c.size()));
  }

  out.padded.d = new_d;
  out.padded.classes.resize(num_classes);
  for (int cls = 0; cls < num_classes; ++cls) {
    for (const auto& p : cfg.classes[cls]) {
      RationalPoint q;
      q.coords = p.coords;
      q.coords.resize(new_d, Rational(0));
      out.padded.classes[cls].push_back(std::move(q));
    }
  }
  // New vertices in groups of r-1 per fresh axis, classes filled in order.
  int group_counter = 0;
  for (int cls = 0; cls < m; ++cls) {
    while (static_cast<int>(out.padded.classes[cls].size()) < r - 1) {
      RationalPoint q;
      q.coords.assign(new_d, Rational(0));
      int axis = cfg.d + group_counter / (r - 1);
      q.coords[axis] = 1;
      out.padded.classes[cls].push_back(std::move(q));
      ++group_counter;
    }
  }
  return out;
}

RainbowPartition PadReduction::restrict_partition(const RainbowPartition& p) const {
  RainbowPartition out;
  const int m = static_cast<int>(original_sizes.size()) - 1;
  for (const auto& part : p.parts) {
    std::vector<PointRef> kept;
    for (const auto& ref : part) {
      if (ref.cls >= m || ref.index < original_sizes[ref.cls]) {
        kept.push_back(ref);
      }
    }
    out.parts.push_back(std::move(kept));
  }
  return out;
}

TrialReport conjecture_trial(int d, int r, int class_size, int trials,
                             std::uint64_t seed) {
  if (d < 1 || r < 2 || class_size < 1 || trials < 1) {
    throw PreconditionError("conjecture_trial: bad parameters");
  }
  TrialReport rep;
  const bool singleton_route = class_size == r - 1;
  const bool extension_route = !singleton_route && class_size >= r && is_prime(r + 1);
  rep.route = singleton_route ? "singleton" : extension_route ? "extension" : "direct";

  for (int trial = 0; trial < trials; ++trial) {
    // Independent per-trial stream derived from (seed, trial).
    std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    std::mt19937_64 rng(seq);
    auto coord = [&]() { return Rational(static_cast<int>(rng() % 2001) - 1000); };
    auto random_point = [&]() {
      RationalPoint p;
      p.coords.reserve(d);
      for (int t = 0; t < d; ++t) {
        p.coords.push_back(coord());
      }
      return p;
    };

    ColoredConfiguration cfg;
    cfg.d = d;
    for (int cls = 0; cls <= d; ++cls) {
      std::vector<RationalPoint> points;
      points.reserve(class_size);
      for (int k = 0; k < class_size; ++k) {
        points.push_back(random_point());
      }
      cfg.classes.push_back(std::move(points));
    }

    bool success = false;
    if (singleton_route || extension_route) {
      cfg.classes.push_back({random_point()});
      int parts = singleton_route ? r : r + 1;
      auto found = find_rainbow_partition(cfg, parts);
      if (found && extension_route) {
        // Drop the part holding the extra point; the witness restricted to
        // the remaining parts is still a witness.
        const int extra_cls = d + 1;
        RainbowPartition trimmed;
        Witness witness;
        witness.point = found->second.point;
        for (std::size_t i = 0; i < found->first.parts.size(); ++i) {
          bool has_extra = std::any_of(found->first.parts[i].begin(),
                                       found->first.parts[i].end(),
                                       [&](const PointRef& ref) { return ref.cls == extra_cls; });
          if (!has_extra) {
            trimmed.parts.push_back(found->first.parts[i]);
            witness.barycentrics.push_back(found->second.barycentrics[i]);
          }
        }
        // The extra point may have gone unused; any r of the parts do.
        while (static_cast<int>(trimmed.parts.size()) > r) {
          trimmed.parts.pop_back();
          witness.barycentrics.pop_back();
        }
        success = static_cast<int>(trimmed.parts.size()) == r &&
                  witness_valid(witness, partition_points(cfg, trimmed));
      } else {
        success = found.has_value();
      }
    } else {
      success = find_rainbow_partition(cfg, r).has_value();
    }

    if (success) {
      ++rep.successes;
    } else {
      ++rep.failures;
      if (rep.failing_configs.size() < 10) {
        rep.failing_configs.push_back(cfg);
      }
    }
  }
  return rep;
}

}  // namespace ctv
