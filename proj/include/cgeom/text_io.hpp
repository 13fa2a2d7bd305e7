#pragma once

// Plain-text file formats. All readers throw ParseError naming the source and
// line on malformed text; writers produce the exact form the readers accept.
//
// Geometry:   `ground: a b c` then one closed set per line (`a,c`, `{}`),
//             sorted by (cardinality, ground-order lexicographic).
// Lattice:    `elements: n` then `i < j` cover pairs, sorted.
// Points:     `label x y ...`, coordinates as integers or `p/q`.
// Poset:      `elems: a b c` then `a < b` relations.
// `#` starts a comment line; blank lines are ignored; text must end in '\n'.

#include <istream>
#include <ostream>
#include <string>

#include "cgeom/constructions.hpp"
#include "cgeom/lattice.hpp"
#include "cgeom/setfam.hpp"

namespace cgeom {

/// Ground set and family as written, before validation.
struct RawFamily {
  GroundSet ground;
  std::vector<SubsetMask> family;
};

RawFamily parse_geometry(std::istream& in, const std::string& source);
/// parse_geometry followed by validate_family (which may throw AxiomViolation).
ConvexGeometry read_geometry(std::istream& in, const std::string& source);
void write_geometry(std::ostream& out, const ConvexGeometry& g);
std::string geometry_to_string(const ConvexGeometry& g);

FiniteLattice read_lattice(std::istream& in, const std::string& source);
void write_lattice(std::ostream& out, const FiniteLattice& l);

PointConfiguration read_points(std::istream& in, const std::string& source);
FinitePoset read_poset(std::istream& in, const std::string& source);

/// Hasse diagram of the closed-set lattice as a DOT digraph, nodes labelled
/// by closed sets and grouped in ranks by cardinality.
void write_hasse_dot(std::ostream& out, const ConvexGeometry& g);

}  // namespace cgeom
