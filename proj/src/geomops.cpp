#include "cgeom/geomops.hpp"

#include "cgeom/errors.hpp"

namespace cgeom {

ConvexGeometry minor(const ConvexGeometry& g, SubsetMask lower, SubsetMask upper) {
  const auto& ground = g.ground();
  if (!g.is_closed(lower)) throw NotClosed("lower set " + ground.format_set(lower) + " is not closed");
  if (!g.is_closed(upper)) throw NotClosed("upper set " + ground.format_set(upper) + " is not closed");
  if (!lower.subset_of(upper))
    throw NotNested(ground.format_set(lower) + " is not contained in " + ground.format_set(upper));

  // Reindex the elements of upper \ lower densely, keeping ground order.
  const auto kept = (upper - lower).indices();
  std::vector<std::string> names;
  names.reserve(kept.size());
  for (auto i : kept) names.push_back(ground.name(i));

  std::vector<SubsetMask> family;
  for (SubsetMask x : g.closed()) {
    if (!lower.subset_of(x) || !x.subset_of(upper)) continue;
    SubsetMask y;
    for (std::size_t k = 0; k < kept.size(); ++k)
      if (x.contains(kept[k])) y |= SubsetMask::singleton(k);
    family.push_back(y);
  }
  return validate_family(GroundSet(std::move(names)), std::move(family));
}

ConvexGeometry product_geometry(const ConvexGeometry& g1, const ConvexGeometry& g2) {
  const std::size_t n1 = g1.ground_size();
  std::vector<std::string> names;
  names.reserve(n1 + g2.ground_size());
  for (const auto& s : g1.ground().names()) names.push_back("1." + s);
  for (const auto& s : g2.ground().names()) names.push_back("2." + s);
  GroundSet ground(std::move(names));

  std::vector<SubsetMask> family;
  family.reserve(g1.closed().size() * g2.closed().size());
  for (SubsetMask x1 : g1.closed())
    for (SubsetMask x2 : g2.closed()) family.push_back(x1 | SubsetMask(x2.bits << n1));
  return validate_family(std::move(ground), std::move(family));
}

ConvexGeometry geometry_from_lattice(const FiniteLattice& l) {
  if (!is_meet_distributive(l)) throw NotMeetDistributive("lattice is not meet-distributive");

  std::vector<FiniteLattice::Element> irreducibles;
  for (FiniteLattice::Element x = 0; x < l.size(); ++x)
    if (l.lower_covers(x).size() == 1) irreducibles.push_back(x);
  if (irreducibles.size() > kMaxGroundSize)
    throw InputError("lattice has " + std::to_string(irreducibles.size()) + " join-irreducibles; at most " +
                     std::to_string(kMaxGroundSize) + " are supported");

  std::vector<std::string> names;
  for (auto j : irreducibles) names.push_back("j" + std::to_string(j));

  std::vector<SubsetMask> family;
  family.reserve(l.size());
  for (FiniteLattice::Element x = 0; x < l.size(); ++x) {
    SubsetMask m;
    for (std::size_t k = 0; k < irreducibles.size(); ++k)
      if (l.leq(irreducibles[k], x)) m |= SubsetMask::singleton(k);
    family.push_back(m);
  }
  return validate_family(GroundSet(std::move(names)), std::move(family));
}

}  // namespace cgeom
