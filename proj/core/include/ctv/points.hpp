#ifndef CTV_POINTS_HPP
#define CTV_POINTS_HPP

#include <compare>
#include <vector>

#include "ctv/rational.hpp"

namespace ctv {

/** A point of R^d with exact rational coordinates. */
struct RationalPoint {
  std::vector<Rational> coords;

  int dim() const { return static_cast<int>(coords.size()); }
  bool operator==(const RationalPoint&) const = default;
};

/**
 * Rational points partitioned into color classes C_0, ..., C_m.  Multiple
 * identical points are allowed; points are identified by (class, index).
 */
struct ColoredConfiguration {
  int d = 0;
  std::vector<std::vector<RationalPoint>> classes;

  int total() const;
  const RationalPoint& point(int cls, int index) const;
};

/** Reference to one point of a configuration. */
struct PointRef {
  int cls = 0;
  int index = 0;
  auto operator<=>(const PointRef&) const = default;
};

/**
 * r disjoint parts, each using at most one point per color class.  Parts
 * are kept sorted; a partition in canonical (unordered) form has its parts
 * sorted by smallest element.
 */
struct RainbowPartition {
  std::vector<std::vector<PointRef>> parts;

  void canonicalize();
  bool operator==(const RainbowPartition&) const = default;
  bool operator<(const RainbowPartition& other) const { return parts < other.parts; }
};

/**
 * A common point of the parts' convex hulls together with exact convex
 * coefficients per part that reproduce it.
 */
struct Witness {
  RationalPoint point;
  std::vector<std::vector<Rational>> barycentrics;  // aligned with parts
};

}  // namespace ctv

#endif  // CTV_POINTS_HPP
