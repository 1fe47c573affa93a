#include "quadbound/quad_map.hpp"

#include <deque>

namespace quadbound {

std::vector<std::vector<int>> faces_of(const QuadMap& m) {
    std::vector<char> seen(static_cast<size_t>(m.half_edges()), 0);
    std::vector<std::vector<int>> faces;
    for (int h = 0; h < m.half_edges(); ++h) {
        if (seen[static_cast<size_t>(h)]) continue;
        std::vector<int> cyc;
        int x = h;
        while (!seen[static_cast<size_t>(x)]) {
            seen[static_cast<size_t>(x)] = 1;
            cyc.push_back(x);
            x = m.face_next(x);
        }
        faces.push_back(std::move(cyc));
    }
    return faces;
}

std::vector<int> face_ids(const QuadMap& m, const std::vector<std::vector<int>>& faces) {
    std::vector<int> id(static_cast<size_t>(m.half_edges()), -1);
    for (size_t f = 0; f < faces.size(); ++f)
        for (int h : faces[f]) id[static_cast<size_t>(h)] = static_cast<int>(f);
    return id;
}

std::vector<int> bfs(const QuadMap& m, int source) {
    std::vector<int> dist(static_cast<size_t>(m.num_vertices), -1);
    std::vector<std::vector<int>> adj(static_cast<size_t>(m.num_vertices));
    for (int h = 0; h < m.half_edges(); ++h)
        adj[static_cast<size_t>(m.vert[static_cast<size_t>(h)])].push_back(
            m.vert[static_cast<size_t>(m.twin[static_cast<size_t>(h)])]);
    std::deque<int> q{source};
    dist[static_cast<size_t>(source)] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : adj[static_cast<size_t>(u)])
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

std::vector<std::string> validate(const QuadMap& m) {
    std::vector<std::string> out;
    const int H = m.half_edges();
    if (H % 2 != 0) out.push_back("odd number of half-edges");
    for (int h = 0; h < H; ++h) {
        if (m.twin[static_cast<size_t>(h)] < 0 || m.twin[static_cast<size_t>(h)] >= H ||
            m.twin[static_cast<size_t>(m.twin[static_cast<size_t>(h)])] != h ||
            m.twin[static_cast<size_t>(h)] == h) {
            out.push_back("twin is not a fixed-point-free involution");
            return out;
        }
        if (m.next[static_cast<size_t>(h)] < 0 || m.next[static_cast<size_t>(h)] >= H) {
            out.push_back("next out of range");
            return out;
        }
        if (m.vert[static_cast<size_t>(m.next[static_cast<size_t>(h)])] != m.vert[static_cast<size_t>(h)])
            out.push_back("rotation leaves its vertex");
    }
    // next must be a permutation whose orbits partition half-edges by vertex
    std::vector<int> indeg(static_cast<size_t>(H), 0);
    for (int h = 0; h < H; ++h) indeg[static_cast<size_t>(m.next[static_cast<size_t>(h)])]++;
    for (int h = 0; h < H; ++h)
        if (indeg[static_cast<size_t>(h)] != 1) {
            out.push_back("next is not a permutation");
            return out;
        }
    if (m.root_half_edge < 0 || m.root_half_edge >= H) {
        out.push_back("missing root half-edge");
        return out;
    }
    std::vector<int> dist = bfs(m, m.vert[static_cast<size_t>(m.root_half_edge)]);
    for (int v = 0; v < m.num_vertices; ++v)
        if (dist[static_cast<size_t>(v)] < 0) out.push_back("map is not connected");
    // Euler relation (sphere)
    auto faces = faces_of(m);
    int V = m.num_vertices, E = m.edges(), F = static_cast<int>(faces.size());
    if (V - E + F != 2)
        out.push_back("Euler relation violated: V-E+F = " + std::to_string(V - E + F));
    // face degrees
    auto ids = face_ids(m, faces);
    int ext = ids[static_cast<size_t>(m.root_half_edge)];
    if (faces[static_cast<size_t>(ext)].size() % 2 != 0) out.push_back("odd boundary length");
    for (size_t f = 0; f < faces.size(); ++f)
        if (static_cast<int>(f) != ext && faces[f].size() != 4)
            out.push_back("inner face of degree " + std::to_string(faces[f].size()));
    // bipartite
    for (int h = 0; h < H; ++h) {
        int a = dist[static_cast<size_t>(m.vert[static_cast<size_t>(h)])];
        int b = dist[static_cast<size_t>(m.vert[static_cast<size_t>(m.twin[static_cast<size_t>(h)])])];
        if ((a + b) % 2 == 0) {
            out.push_back("map is not bipartite");
            break;
        }
    }
    return out;
}

std::vector<int64_t> canonical_form(const QuadMap& m) {
    const int H = m.half_edges();
    std::vector<int> lab(static_cast<size_t>(H), -1);
    std::vector<int> order;
    order.reserve(static_cast<size_t>(H));
    lab[static_cast<size_t>(m.root_half_edge)] = 0;
    order.push_back(m.root_half_edge);
    for (size_t i = 0; i < order.size(); ++i) {
        int h = order[i];
        for (int nh : {m.twin[static_cast<size_t>(h)], m.next[static_cast<size_t>(h)]}) {
            if (lab[static_cast<size_t>(nh)] < 0) {
                lab[static_cast<size_t>(nh)] = static_cast<int>(order.size());
                order.push_back(nh);
            }
        }
    }
    std::vector<int64_t> form;
    form.reserve(2 * order.size() + 2);
    for (int h : order) {
        form.push_back(lab[static_cast<size_t>(m.twin[static_cast<size_t>(h)])]);
        form.push_back(lab[static_cast<size_t>(m.next[static_cast<size_t>(h)])]);
    }
    // pin the origin by its first incident half-edge in bfs order
    int64_t origin_mark = -1;
    for (size_t i = 0; i < order.size(); ++i)
        if (m.vert[static_cast<size_t>(order[i])] == m.origin_vertex) {
            origin_mark = static_cast<int64_t>(i);
            break;
        }
    form.push_back(origin_mark);
    return form;
}

}  // namespace quadbound
