#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quadbound {

/// Rotation-system planar map. Half-edge h has a twin, an origin vertex and
/// a successor in the counterclockwise rotation around that vertex. Faces are
/// the orbits of h -> next(twin(h)). The external face is the orbit of
/// root_half_edge; the root edge lies on the boundary with the external face
/// along its orbit.
struct QuadMap {
    std::vector<int> twin;
    std::vector<int> next;  // ccw next around the origin vertex
    std::vector<int> vert;  // origin vertex per half-edge
    int num_vertices = 0;
    int origin_vertex = -1;
    int root_half_edge = -1;

    int half_edges() const { return static_cast<int>(twin.size()); }
    int edges() const { return half_edges() / 2; }
    int face_next(int h) const { return next[static_cast<size_t>(twin[static_cast<size_t>(h)])]; }
};

std::vector<std::vector<int>> faces_of(const QuadMap& m);
// face id per half-edge, parallel to faces_of
std::vector<int> face_ids(const QuadMap& m, const std::vector<std::vector<int>>& faces);

/// BFS graph distances from a source vertex; unreachable vertices get -1.
std::vector<int> bfs(const QuadMap& m, int source);

/// Structural checks: permutation consistency, connectivity, Euler relation
/// (genus zero), every non-external face of degree 4, even boundary length,
/// bipartiteness. Returns human-readable violations (empty means valid).
std::vector<std::string> validate(const QuadMap& m);

/// Canonical invariant of the rooted pointed map (root half-edge, origin and
/// external face included); equal iff the rooted maps are isomorphic.
std::vector<int64_t> canonical_form(const QuadMap& m);

}  // namespace quadbound
