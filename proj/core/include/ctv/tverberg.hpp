#ifndef CTV_TVERBERG_HPP
#define CTV_TVERBERG_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctv/points.hpp"

namespace ctv {

/**
 * Exact test whether the convex hulls of the given parts share a point,
 * by rational LP feasibility.  Returns a self-checkable witness (convex
 * coefficients per part reproducing a common point) or nullopt.  Throws
 * PreconditionError on an empty part or mismatched ambient dimensions.
 */
std::optional<Witness> hulls_intersect(const std::vector<std::vector<RationalPoint>>& parts);

/** Exact validity check of a witness against its parts. */
bool witness_valid(const Witness& w, const std::vector<std::vector<RationalPoint>>& parts);

/** Gather the concrete points behind a partition's references. */
std::vector<std::vector<RationalPoint>> partition_points(const ColoredConfiguration& cfg,
                                                         const RainbowPartition& p);

/**
 * The reference configuration behind the cocycle computation: classes
 * C_0..C_d hold r-1 copies of e_b each (e_0 the origin), and C_{d+1} is the
 * barycenter of the standard d-simplex.  N+1 points in total.
 */
ColoredConfiguration reference_configuration(int d, int r);

struct EnumerationOptions {
  bool use_all_points = false;       // partitions must cover the configuration
  std::uint64_t budget = 1'000'000;  // complete partitions enumerated
};

/**
 * Enumerate rainbow r-partitions (r disjoint nonempty parts, at most one
 * point per class per part; points may stay unused unless use_all_points).
 * Partitions are produced in canonical unordered form, deterministically:
 * points are scanned in (class, index) order and assigned to existing parts
 * in order, then to a fresh part, then left unused.  Enumeration stops when
 * the callback returns false; exceeding the budget throws BudgetError.
 */
void enumerate_rainbow_partitions(const ColoredConfiguration& cfg, int r,
                                  const EnumerationOptions& opts,
                                  const std::function<bool(const RainbowPartition&)>& fn);

/**
 * First enumerated rainbow partition whose hulls share a point, with its
 * witness; nullopt when the enumeration is exhausted.
 */
std::optional<std::pair<RainbowPartition, Witness>> find_rainbow_partition(
    const ColoredConfiguration& cfg, int r, const EnumerationOptions& opts = {});

/**
 * Number of unordered rainbow partitions into r nonempty parts that use
 * every point and whose hulls share a point.
 */
std::int64_t count_tverberg_partitions(const ColoredConfiguration& cfg, int r,
                                       const EnumerationOptions& opts = {});

/**
 * The padding reduction to the standard shape: a configuration of N+1
 * points in classes of size <= r-1 whose last class is a singleton is
 * embedded into R^{d'}, d' = (number of classes) - 2, all classes but the
 * last are topped up to size r-1 with new points placed at the unit vectors
 * e_{d+1}, ..., e_{d'} (in groups of r-1 per vector), and partitions of the
 * padded configuration restrict to the original by dropping padded points.
 */
struct PadReduction {
  ColoredConfiguration padded;
  int original_d = 0;
  std::vector<int> original_sizes;

  /** Drop padded points from each part (parts stay nonempty). */
  RainbowPartition restrict_partition(const RainbowPartition& p) const;
};

PadReduction pad_reduction(const ColoredConfiguration& cfg, int r);

struct TrialReport {
  int successes = 0;
  int failures = 0;
  std::vector<ColoredConfiguration> failing_configs;  // capped sample
  std::string route;  // "direct", "singleton", or "extension"
};

/**
 * Randomized experiment: sample `trials` configurations with d+1 classes of
 * `class_size` points each, coordinates uniform on the integer grid
 * [-1000, 1000]^d, and search for a rainbow r-partition with intersecting
 * hulls.  Deterministic given the seed (per-trial streams are derived from
 * (seed, trial)).
 *
 * Route selection: class_size == r-1 appends a singleton class (the shape
 * with a guaranteed partition); class_size >= r with r+1 prime appends a
 * singleton, searches for r+1 parts and drops the part containing the extra
 * point; anything else searches directly (no guarantee below the trivial
 * bound).
 */
TrialReport conjecture_trial(int d, int r, int class_size, int trials,
                             std::uint64_t seed);

}  // namespace ctv

#endif  // CTV_TVERBERG_HPP
