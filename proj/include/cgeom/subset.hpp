#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cgeom {

/// Largest supported ground set. Masks fit in one machine word and every
/// algorithm here is exponential in the ground size anyway.
inline constexpr std::size_t kMaxGroundSize = 16;

/// A subset of ground-set indices, bit i set iff index i is a member.
///
/// The natural order is by (cardinality, numeric bit pattern), which is the
/// order closed families are stored in.
struct SubsetMask {
  std::uint32_t bits = 0;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t b) : bits(b) {}

  static constexpr SubsetMask singleton(std::size_t i) { return SubsetMask(std::uint32_t{1} << i); }
  static constexpr SubsetMask full(std::size_t n) {
    return SubsetMask(n == 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1));
  }

  constexpr bool empty() const { return bits == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits)); }
  constexpr bool contains(std::size_t i) const { return (bits >> i) & 1u; }
  constexpr bool subset_of(SubsetMask other) const { return (bits & ~other.bits) == 0; }
  constexpr bool proper_subset_of(SubsetMask other) const { return subset_of(other) && bits != other.bits; }

  constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits | o.bits); }
  constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits & o.bits); }
  constexpr SubsetMask operator-(SubsetMask o) const { return SubsetMask(bits & ~o.bits); }
  constexpr SubsetMask& operator|=(SubsetMask o) { bits |= o.bits; return *this; }
  constexpr SubsetMask& operator&=(SubsetMask o) { bits &= o.bits; return *this; }

  /// Member indices in increasing order.
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::uint32_t b = bits; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  constexpr bool operator==(const SubsetMask&) const = default;
  constexpr std::strong_ordering operator<=>(const SubsetMask& o) const {
    if (auto c = size() <=> o.size(); c != 0) return c;
    return bits <=> o.bits;
  }
};

/// Compare two subsets by (cardinality, lexicographic order of their sorted
/// index lists). This is the line order of the geometry text format.
bool ground_order_less(SubsetMask a, SubsetMask b);

/// An ordered list of distinct element labels.
///
/// Labels are nonempty, contain no whitespace or commas, and may not be the
/// literal `{}` (the text spelling of the empty set).
class GroundSet {
public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> names);

  /// Labels "1", "2", ..., "n".
  static GroundSet numbered(std::size_t n);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  SubsetMask full() const { return SubsetMask::full(names_.size()); }

  std::optional<std::size_t> index_of(std::string_view label) const;
  bool valid(SubsetMask m) const { return m.subset_of(full()); }

  /// Parse a comma-separated label list (`{}` for the empty set).
  SubsetMask parse_set(std::string_view text) const;
  /// Comma-separated labels in ground order, `{}` for the empty set.
  std::string format_set(SubsetMask m) const;

  bool operator==(const GroundSet&) const = default;

private:
  std::vector<std::string> names_;
};

/// Throws InputError unless `label` is a legal ground-set label.
void check_label(std::string_view label);

}  // namespace cgeom
