#include "cgeom/constructions.hpp"

#include <algorithm>

#include "cgeom/errors.hpp"
#include "cgeom/kernels.hpp"

namespace cgeom {

PointConfiguration::PointConfiguration(std::vector<std::string> labels, std::vector<Point> coords)
    : labels_(std::move(labels)), coords_(std::move(coords)) {
  if (labels_.size() != coords_.size()) throw InputError("label count does not match point count");
  GroundSet check(labels_);  // label validity and distinctness
  if (!coords_.empty()) {
    const std::size_t d = coords_.front().size();
    if (d == 0) throw DimensionMismatch("points must have dimension at least 1");
    for (std::size_t i = 0; i < coords_.size(); ++i)
      if (coords_[i].size() != d)
        throw DimensionMismatch("point '" + labels_[i] + "' has dimension " + std::to_string(coords_[i].size()) +
                                ", expected " + std::to_string(d));
  }
  for (std::size_t i = 0; i < coords_.size(); ++i)
    for (std::size_t j = i + 1; j < coords_.size(); ++j)
      if (coords_[i] == coords_[j])
        throw DuplicatePoints("points '" + labels_[i] + "' and '" + labels_[j] + "' coincide");
}

FinitePoset::FinitePoset(std::vector<std::string> elems, std::span<const std::pair<std::size_t, std::size_t>> less)
    : elems_(std::move(elems)) {
  GroundSet check(elems_);
  const std::size_t n = elems_.size();
  leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = 1;
  for (auto [a, b] : less) {
    if (a >= n || b >= n) throw InputError("order pair references an unknown element");
    leq_[a * n + b] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k * n + j]) leq_[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq_[i * n + j] && leq_[j * n + i])
        throw InputError("order relation has a cycle through '" + elems_[i] + "' and '" + elems_[j] + "'");
}

ConvexGeometry convex_shelling(const PointConfiguration& pc) {
  const auto& pts = pc.points();
  const std::size_t n = pts.size();
  auto hull_closed = [&](SubsetMask x) {
    std::vector<Point> members;
    for (auto i : x.indices()) members.push_back(pts[i]);
    for (std::size_t p = 0; p < n; ++p)
      if (!x.contains(p) && point_in_hull(pts[p], members)) return false;
    return true;
  };
  return validate_family(GroundSet(pc.labels()), parallel::filter_masks(n, hull_closed));
}

ConvexGeometry poset_shelling(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<SubsetMask> down(n);
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t f = 0; f < n; ++f)
      if (p.leq(f, e)) down[e] |= SubsetMask::singleton(f);
  auto is_downset = [&](SubsetMask x) {
    for (auto e : x.indices())
      if (!down[e].subset_of(x)) return false;
    return true;
  };
  return validate_family(GroundSet(p.elems()), parallel::filter_masks(n, is_downset));
}

ConvexGeometry chain_geometry(std::size_t n) {
  std::vector<SubsetMask> family;
  for (std::size_t k = 0; k <= n; ++k) family.push_back(SubsetMask::full(k));
  return validate_family(GroundSet::numbered(n), std::move(family));
}

ConvexGeometry boolean_geometry(std::size_t n) {
  if (n > kMaxGroundSize) throw InputError("ground set too large");
  std::vector<SubsetMask> family;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) family.emplace_back(static_cast<std::uint32_t>(b));
  return validate_family(GroundSet::numbered(n), std::move(family));
}

PointConfiguration convex_position_configuration(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Point> coords;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational t(static_cast<long>(i));
    const Rational denom = 1 + t * t;
    labels.push_back(std::to_string(i + 1));
    coords.push_back({(1 - t * t) / denom, 2 * t / denom});
  }
  return PointConfiguration(std::move(labels), std::move(coords));
}

}  // namespace cgeom
