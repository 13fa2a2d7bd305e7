#pragma once

// Shared test corpus: every geometry the property and acceptance suites sweep.

#include <cstddef>
#include <string>
#include <vector>

#include "cgeom/constructions.hpp"
#include "cgeom/setfam.hpp"

namespace cgeom::testing {

struct CorpusEntry {
  std::string name;
  ConvexGeometry geometry;
};

/// All labelled posets on 0..max_n elements.
std::vector<FinitePoset> all_posets(std::size_t max_n);

/// Seeded random configurations with small integer coordinates, so that
/// collinear and coplanar subsets occur often. Between 1 and max_points
/// points, dimension 1..3.
std::vector<PointConfiguration> random_configurations(std::size_t count, std::size_t max_points, unsigned seed);

/// The five-point cross a=(0,-1), b=(-1,0), c=(0,0), d=(1,0), e=(0,1).
PointConfiguration p1_configuration();

/// Poset shellings (posets with at most 4 elements), convex shellings of 24
/// random configurations with at most 6 points, chain and Boolean geometries
/// with n <= 6, and the P1 shelling.
const std::vector<CorpusEntry>& corpus();

/// One corpus geometry per lattice isomorphism class, grade <= max_grade.
std::vector<CorpusEntry> distinct_classes(std::size_t max_grade);

/// Corpus entries that are poset shellings.
std::vector<CorpusEntry> poset_shellings();

}  // namespace cgeom::testing
