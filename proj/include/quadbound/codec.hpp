#pragma once

#include "quadbound/boundary_code.hpp"
#include "quadbound/quad_map.hpp"

namespace quadbound {

/// Closure of the coded object: rebuilds the pointed quadrangulation with
/// boundary, its origin and the marked boundary edge. Inverse of encode.
QuadMap decode(const BoundaryCode& code);

/// Forward direction of the bijection: BFS labels from the origin, one mobile
/// edge per inner face joining its two corners followed by a smaller label,
/// external-face descents carrying the trees. The map's root half-edge fixes
/// the opening and must start at a closest boundary vertex.
BoundaryCode encode(const QuadMap& map);

}  // namespace quadbound
