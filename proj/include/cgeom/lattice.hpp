#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cgeom/subset.hpp"

namespace cgeom {

class ConvexGeometry;

/// A finite lattice with its full order, cover relation and meet/join tables.
///
/// Elements are indices 0 .. size()-1. Each element carries a display label;
/// lattices built from a geometry also remember the closed set behind every
/// element (origin()), so intervals can report witnesses in ground-set terms.
class FiniteLattice {
public:
  using Element = std::size_t;

  /// Build from a reflexive order matrix (row-major, leq[x * n + y] != 0 iff
  /// x <= y). Throws NotALattice if the relation is not a partial order or
  /// some pair lacks a meet or a join.
  static FiniteLattice from_order(std::size_t n, std::vector<std::uint8_t> leq,
                                  std::vector<std::string> labels = {}, std::vector<SubsetMask> origin = {});

  /// Build from generating pairs x < y (normally the cover relation).
  static FiniteLattice from_covers(std::size_t n, std::span<const std::pair<Element, Element>> pairs);

  std::size_t size() const noexcept { return n_; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  bool leq(Element x, Element y) const { return leq_[x * n_ + y] != 0; }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  Element meet(Element x, Element y) const { return meet_[x * n_ + y]; }
  Element join(Element x, Element y) const { return join_[x * n_ + y]; }

  const std::vector<Element>& upper_covers(Element x) const { return up_[x]; }
  const std::vector<Element>& lower_covers(Element x) const { return down_[x]; }
  /// All cover pairs (x, y), x covered by y, sorted.
  std::vector<std::pair<Element, Element>> cover_pairs() const;

  /// Length of the longest chain from bottom to x.
  std::size_t height(Element x) const { return height_[x]; }
  /// Element counts per height 0 .. height(top).
  std::vector<std::size_t> rank_sizes() const;

  const std::string& label(Element x) const { return labels_[x]; }
  bool has_origin() const noexcept { return !origin_.empty(); }
  SubsetMask origin(Element x) const { return origin_.at(x); }
  /// Element whose origin is `m`, if any.
  std::optional<Element> find_origin(SubsetMask m) const;

private:
  friend FiniteLattice direct_product(const FiniteLattice& l1, const FiniteLattice& l2);

  FiniteLattice() = default;

  std::size_t n_ = 0;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<std::uint32_t> meet_;
  std::vector<std::uint32_t> join_;
  std::vector<std::vector<Element>> up_;
  std::vector<std::vector<Element>> down_;
  std::vector<std::size_t> height_;
  std::vector<std::string> labels_;
  std::vector<SubsetMask> origin_;
};

/// Closed sets under containment; meet is intersection, join is the closure
/// of the union. Elements follow the geometry's storage order.
FiniteLattice lattice_of_closed_sets(const ConvexGeometry& g);

/// The induced lattice on [a, b]. Throws NotComparable unless a <= b.
FiniteLattice interval(const FiniteLattice& l, FiniteLattice::Element a, FiniteLattice::Element b);

/// Componentwise order on pairs; element (i, j) has index i * |l2| + j.
FiniteLattice direct_product(const FiniteLattice& l1, const FiniteLattice& l2);

/// The chain 0 < 1 < ... < n-1 (n >= 1).
FiniteLattice chain_lattice(std::size_t n);

/// Meet of a set of elements; the top for an empty set.
FiniteLattice::Element meet_all(const FiniteLattice& l, std::span<const FiniteLattice::Element> xs);

/// True iff with A the atoms, |l| = 2^|A| and S -> join(S) is a bijection.
bool is_boolean(const FiniteLattice& l);
/// True iff every [i(x), x] is Boolean, i(x) the meet of the lower covers of x.
bool is_meet_distributive(const FiniteLattice& l);
bool is_distributive(const FiniteLattice& l);

/// Identity of a lattice isomorphism class.
///
/// `text` spells the cover relation under a canonical labeling, e.g.
/// `L3[0<1,1<2]` for the 3-chain. Equal keys iff isomorphic lattices.
struct CanonicalKey {
  std::string text;
  std::size_t size = 0;

  bool operator==(const CanonicalKey& o) const { return text == o.text; }
  std::strong_ordering operator<=>(const CanonicalKey& o) const { return text <=> o.text; }
};

CanonicalKey canonical_key(const FiniteLattice& l);

namespace detail {
/// Canonical key computed without the process-wide cache.
CanonicalKey canonical_key_uncached(const FiniteLattice& l);
}  // namespace detail

}  // namespace cgeom
