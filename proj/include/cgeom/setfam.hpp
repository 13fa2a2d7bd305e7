#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cgeom/subset.hpp"

namespace cgeom {

/// A finite convex geometry given by its family of closed sets.
///
/// Instances only come out of validate_family(), so every value satisfies the
/// three set-family axioms: the empty set and the ground set are closed, the
/// family is closed under intersection, and every proper closed set grows by
/// a single element to another closed set. The empty geometry (no elements,
/// one closed set) is admitted; it is the unit of the Hopf algebra.
class ConvexGeometry {
public:
  const GroundSet& ground() const noexcept { return ground_; }
  /// Closed sets sorted by (cardinality, numeric mask), no duplicates.
  const std::vector<SubsetMask>& closed() const noexcept { return closed_; }
  std::size_t ground_size() const noexcept { return ground_.size(); }
  SubsetMask full() const { return ground_.full(); }

  bool is_closed(SubsetMask m) const;
  /// Position of `m` in closed(), if closed.
  std::optional<std::size_t> index_of(SubsetMask m) const;

  bool operator==(const ConvexGeometry&) const = default;

private:
  friend ConvexGeometry validate_family(GroundSet ground, std::vector<SubsetMask> family);
  ConvexGeometry(GroundSet g, std::vector<SubsetMask> c) : ground_(std::move(g)), closed_(std::move(c)) {}

  GroundSet ground_;
  std::vector<SubsetMask> closed_;
};

/// Check the axioms and build a geometry.
///
/// Axioms are tried in order i, ii, iii; the first failure throws
/// AxiomViolation naming the least offending set(s) in storage order.
/// Masks outside the ground set or an empty family throw InputError.
ConvexGeometry validate_family(GroundSet ground, std::vector<SubsetMask> family);

/// The geometry with no elements and the single closed set {}.
ConvexGeometry empty_geometry();

/// Smallest closed superset of `a`.
SubsetMask closure(const ConvexGeometry& g, SubsetMask a);

/// closure() of every mask 0 .. 2^n - 1, indexed by the mask bits.
std::vector<SubsetMask> closure_table(const ConvexGeometry& g);

struct AntiexchangeCounterexample {
  SubsetMask base;
  std::size_t x;
  std::size_t y;
};

/// Exhaustive antiexchange test over all A and all x != y.
/// Returns nullopt when the property holds, otherwise the counterexample with
/// the numerically least A (then least x, then least y).
std::optional<AntiexchangeCounterexample> check_antiexchange(const ConvexGeometry& g);

namespace detail {
/// Membership table over all 2^n masks.
std::vector<std::uint8_t> membership_table(std::size_t ground_size, std::span<const SubsetMask> sorted_family);
}  // namespace detail

}  // namespace cgeom
