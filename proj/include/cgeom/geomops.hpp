#pragma once

#include "cgeom/lattice.hpp"
#include "cgeom/setfam.hpp"

namespace cgeom {

/// The minor M[A, B]: ground set B \ A, closed sets X \ A for closed X with
/// A ⊆ X ⊆ B. The result is run through validate_family.
/// Throws NotClosed if A or B is not closed and NotNested unless A ⊆ B.
ConvexGeometry minor(const ConvexGeometry& g, SubsetMask lower, SubsetMask upper);

/// Product on the disjoint union. Labels become `1.<label>` and `2.<label>`
/// so the ground sets never collide; closed sets are the unions X1 ∪ X2.
ConvexGeometry product_geometry(const ConvexGeometry& g1, const ConvexGeometry& g2);

/// Inverse of lattice_of_closed_sets up to isomorphism.
///
/// The ground set is the join-irreducible elements (those covering exactly one
/// element), labelled `j<index>`; element x contributes the closed set of
/// join-irreducibles below it. Throws NotMeetDistributive.
ConvexGeometry geometry_from_lattice(const FiniteLattice& l);

}  // namespace cgeom
