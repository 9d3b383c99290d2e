#pragma once

#include <vector>

#include "nilhoro/ints.hpp"
#include "nilhoro/linalg.hpp"

namespace nilhoro {

using LatticeVec = std::vector<Int>;

// A facet carries the rational linear functional normalised to take the
// value 1 on the facet (valid because the origin is interior) and the
// indices of the hull vertices lying on it.
struct PolytopeFacet {
  RatVec functional;
  std::vector<std::size_t> vertex_indices;
};

struct LatticePolytope {
  int dim = 0;
  std::vector<LatticeVec> vertices;  // extreme points, lexicographically sorted
  std::vector<PolytopeFacet> facets;  // sorted by functional
};

/// Exact convex hull of lattice points in dimension 1, 2 or 3, by brute-force
/// enumeration of supporting hyperplanes through dim-subsets of the points.
/// Requires the points to affinely span the full dimension and the origin to
/// be in the interior; violations raise std::invalid_argument naming the
/// defect.
LatticePolytope convex_hull(const std::vector<LatticeVec>& points);

/// f applied to a lattice point, exactly.
Rat apply_functional(const RatVec& f, const LatticeVec& p);

}  // namespace nilhoro
