#include "cgeom/setfam.hpp"

#include <algorithm>

#include "cgeom/errors.hpp"
#include "cgeom/kernels.hpp"

namespace cgeom {

bool ConvexGeometry::is_closed(SubsetMask m) const {
  return std::binary_search(closed_.begin(), closed_.end(), m);
}

std::optional<std::size_t> ConvexGeometry::index_of(SubsetMask m) const {
  auto it = std::lower_bound(closed_.begin(), closed_.end(), m);
  if (it == closed_.end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - closed_.begin());
}

namespace detail {
std::vector<std::uint8_t> membership_table(std::size_t ground_size, std::span<const SubsetMask> sorted_family) {
  std::vector<std::uint8_t> member(std::size_t{1} << ground_size, 0);
  for (SubsetMask m : sorted_family) member[m.bits] = 1;
  return member;
}
}  // namespace detail

ConvexGeometry validate_family(GroundSet ground, std::vector<SubsetMask> family) {
  if (family.empty()) throw InputError("set family is empty");
  for (SubsetMask m : family)
    if (!ground.valid(m))
      throw InputError("subset mask " + std::to_string(m.bits) + " references indices outside the ground set");

  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());

  const SubsetMask full = ground.full();
  if (!std::binary_search(family.begin(), family.end(), SubsetMask{}))
    throw AxiomViolation(1, {SubsetMask{}}, "axiom i violated: the empty set {} is not in the family");
  if (!std::binary_search(family.begin(), family.end(), full))
    throw AxiomViolation(1, {full},
                         "axiom i violated: the ground set " + ground.format_set(full) + " is not in the family");

  const auto member = detail::membership_table(ground.size(), family);
  if (auto bad = parallel::find_intersection_violation(family, member)) {
    const SubsetMask x = family[bad->first], y = family[bad->second];
    throw AxiomViolation(2, {x, y, x & y},
                         "axiom ii violated: the intersection of " + ground.format_set(x) + " and " +
                             ground.format_set(y) + " is " + ground.format_set(x & y) +
                             ", which is not in the family");
  }

  for (SubsetMask x : family) {
    if (x == full) continue;
    bool extends = false;
    for (std::size_t z = 0; z < ground.size() && !extends; ++z)
      extends = !x.contains(z) && member[(x | SubsetMask::singleton(z)).bits];
    if (!extends)
      throw AxiomViolation(3, {x},
                           "axiom iii violated: " + ground.format_set(x) +
                               " has no single-element extension in the family");
  }

  return ConvexGeometry(std::move(ground), std::move(family));
}

ConvexGeometry empty_geometry() { return validate_family(GroundSet{}, {SubsetMask{}}); }

SubsetMask closure(const ConvexGeometry& g, SubsetMask a) {
  SubsetMask acc = g.full();
  for (SubsetMask x : g.closed())
    if (a.subset_of(x)) acc &= x;
  return acc;
}

std::vector<SubsetMask> closure_table(const ConvexGeometry& g) {
  return parallel::closure_table(g.ground_size(), g.closed());
}

std::optional<AntiexchangeCounterexample> check_antiexchange(const ConvexGeometry& g) {
  const auto table = closure_table(g);
  return parallel::find_antiexchange_violation(g.ground_size(), table);
}

}  // namespace cgeom
