#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cgeom/rational.hpp"
#include "cgeom/setfam.hpp"

namespace cgeom {

using Point = std::vector<Rational>;

/// Labelled points with exact coordinates, all of the same dimension d >= 1.
/// Throws DimensionMismatch on ragged input and DuplicatePoints on repeats.
class PointConfiguration {
public:
  PointConfiguration(std::vector<std::string> labels, std::vector<Point> coords);

  std::size_t size() const noexcept { return coords_.size(); }
  std::size_t dimension() const noexcept { return coords_.empty() ? 0 : coords_.front().size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Point>& points() const noexcept { return coords_; }

private:
  std::vector<std::string> labels_;
  std::vector<Point> coords_;
};

/// A finite partial order, stored as its full relation.
class FinitePoset {
public:
  /// `less` holds generating pairs (a, b) meaning a < b; the order is their
  /// reflexive-transitive closure. Throws InputError on a cycle.
  FinitePoset(std::vector<std::string> elems, std::span<const std::pair<std::size_t, std::size_t>> less);

  std::size_t size() const noexcept { return elems_.size(); }
  const std::vector<std::string>& elems() const noexcept { return elems_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * elems_.size() + b] != 0; }

private:
  std::vector<std::string> elems_;
  std::vector<std::uint8_t> leq_;
};

/// Exact test of p ∈ conv(xs). Tries every affinely independent subset of at
/// most d+1 points and solves the barycentric system over the rationals.
/// Throws DimensionMismatch if the dimensions disagree.
bool point_in_hull(const Point& p, std::span<const Point> xs);

/// True iff the points are affinely independent (exact rank computation).
bool affinely_independent(std::span<const Point> xs);

/// Closed sets are the X with conv(X) ∩ P = X.
ConvexGeometry convex_shelling(const PointConfiguration& pc);

/// Closed sets are the down-sets of the poset.
ConvexGeometry poset_shelling(const FinitePoset& p);

/// Ground {1..n}, closed sets {} and the prefixes {1..k}.
ConvexGeometry chain_geometry(std::size_t n);

/// Ground {1..n}, every subset closed.
ConvexGeometry boolean_geometry(std::size_t n);

/// n distinct rational points on the unit circle, ((1-t^2)/(1+t^2), 2t/(1+t^2))
/// for t = 0, 1, ..., n-1. They are in convex position, so their convex
/// shelling is Boolean. Labels "1".."n".
PointConfiguration convex_position_configuration(std::size_t n);

}  // namespace cgeom
