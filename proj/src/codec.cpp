#include "quadbound/codec.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadbound {

namespace {

constexpr int kOrigin = -1;

struct CornerWord {
    std::vector<int> vertex;                // per corner
    std::vector<int> label;                 // per corner
    std::vector<int> vertex_label;          // per vertex
    std::vector<std::vector<int>> corners;  // per vertex, in word order
};

void contour(const WellLabeledTree& t, CornerWord& w, int& next_vertex) {
    int v = next_vertex++;
    w.vertex_label.push_back(t.label);
    w.corners.push_back({});
    auto emit = [&]() {
        w.corners[static_cast<size_t>(v)].push_back(static_cast<int>(w.vertex.size()));
        w.vertex.push_back(v);
        w.label.push_back(t.label);
    };
    emit();
    // children are walked right-to-left; together with the reversed tree
    // order around the external vertex this runs the whole contour in the
    // orientation the closure below expects
    for (auto it = t.children.rbegin(); it != t.children.rend(); ++it) {
        contour(*it, w, next_vertex);
        emit();
    }
}

}  // namespace

QuadMap decode(const BoundaryCode& code) {
    {
        auto bad = validate(code);
        if (!bad.empty()) throw std::invalid_argument("decode: invalid code: " + bad.front());
    }
    CornerWord w;
    int next_vertex = 0;
    for (auto it = code.trees.rbegin(); it != code.trees.rend(); ++it) contour(*it, w, next_vertex);
    const int M = static_cast<int>(w.vertex.size());
    const int origin = next_vertex;

    // successor: nearest corner cyclically before i with label l_i - 1
    int max_label = 0;
    for (int l : w.label) max_label = std::max(max_label, l);
    std::vector<int> last(static_cast<size_t>(max_label) + 1, -1);
    std::vector<int> succ(static_cast<size_t>(M), kOrigin);
    for (int i = 0; i < M; ++i) last[static_cast<size_t>(w.label[static_cast<size_t>(i)])] = i;
    for (int i = 0; i < M; ++i) {
        int l = w.label[static_cast<size_t>(i)];
        if (l > 1) {
            succ[static_cast<size_t>(i)] = last[static_cast<size_t>(l - 1)];
            if (succ[static_cast<size_t>(i)] < 0) throw std::invalid_argument("decode: label gap in code");
        }
        last[static_cast<size_t>(l)] = i;
    }

    // arc t: half-edges 2t at corner t, 2t+1 at succ(t) (or at the origin)
    std::vector<std::vector<std::pair<int, int>>> at_corner(static_cast<size_t>(M));
    std::vector<std::pair<int, int>> at_origin;
    for (int i = 0; i < M; ++i) {
        int t = succ[static_cast<size_t>(i)];
        if (t == kOrigin) {
            at_corner[static_cast<size_t>(i)].push_back({M, 2 * i});
            at_origin.push_back({i, 2 * i + 1});
        } else {
            at_corner[static_cast<size_t>(i)].push_back({((t - i) % M + M) % M, 2 * i});
            at_corner[static_cast<size_t>(t)].push_back({((i - t) % M + M) % M, 2 * i + 1});
        }
    }

    QuadMap m;
    m.num_vertices = origin + 1;
    m.origin_vertex = origin;
    m.twin.resize(static_cast<size_t>(2 * M));
    m.next.resize(static_cast<size_t>(2 * M));
    m.vert.resize(static_cast<size_t>(2 * M));
    for (int i = 0; i < M; ++i) {
        m.twin[static_cast<size_t>(2 * i)] = 2 * i + 1;
        m.twin[static_cast<size_t>(2 * i + 1)] = 2 * i;
        m.vert[static_cast<size_t>(2 * i)] = w.vertex[static_cast<size_t>(i)];
        int t = succ[static_cast<size_t>(i)];
        m.vert[static_cast<size_t>(2 * i + 1)] = (t == kOrigin) ? origin : w.vertex[static_cast<size_t>(t)];
    }
    auto close_cycle = [&](const std::vector<int>& hl) {
        for (size_t j = 0; j < hl.size(); ++j)
            m.next[static_cast<size_t>(hl[j])] = hl[(j + 1) % hl.size()];
    };
    std::vector<int> hl;
    for (int v = 0; v < origin; ++v) {
        hl.clear();
        for (int c : w.corners[static_cast<size_t>(v)]) {
            auto& ends = at_corner[static_cast<size_t>(c)];
            std::sort(ends.begin(), ends.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
            for (auto& [kappa, h] : ends) hl.push_back(h);
        }
        close_cycle(hl);
    }
    std::sort(at_origin.begin(), at_origin.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    hl.clear();
    for (auto& [src, h] : at_origin) hl.push_back(h);
    if (hl.empty()) throw std::invalid_argument("decode: origin would be isolated");
    close_cycle(hl);

    m.root_half_edge = m.next[static_cast<size_t>(m.twin[0])];
    return m;
}

BoundaryCode encode(const QuadMap& m) {
    {
        auto bad = validate(m);
        if (!bad.empty()) throw std::invalid_argument("encode: invalid map: " + bad.front());
    }
    std::vector<int> dist = bfs(m, m.origin_vertex);

    // external contour from the root
    std::vector<int> contour_h;
    for (int h = m.root_half_edge;;) {
        contour_h.push_back(h);
        h = m.face_next(h);
        if (h == m.root_half_edge) break;
    }
    const int len = static_cast<int>(contour_h.size());
    if (len % 2 != 0) throw std::invalid_argument("encode: odd perimeter");
    std::vector<int> seq(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) seq[static_cast<size_t>(i)] = dist[static_cast<size_t>(m.vert[static_cast<size_t>(contour_h[static_cast<size_t>(i)])])];
    const int base = seq[0];
    std::vector<int> steps(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) {
        int nxt = seq[static_cast<size_t>((i + 1) % len)];
        steps[static_cast<size_t>(i)] = nxt - seq[static_cast<size_t>(i)];
        if (std::abs(steps[static_cast<size_t>(i)]) != 1) throw std::invalid_argument("encode: contour step not +-1");
        if (nxt < base) throw std::invalid_argument("encode: root not at a closest boundary vertex");
    }
    if (len >= 2 && steps[0] != 1) throw std::invalid_argument("encode: root edge must ascend");

    // rotation lists and slot indices
    std::vector<std::vector<int>> rot(static_cast<size_t>(m.num_vertices));
    std::vector<int> slot(static_cast<size_t>(m.half_edges()), -1);
    {
        std::vector<char> seen(static_cast<size_t>(m.half_edges()), 0);
        for (int h0 = 0; h0 < m.half_edges(); ++h0) {
            if (seen[static_cast<size_t>(h0)]) continue;
            int v = m.vert[static_cast<size_t>(h0)];
            int h = h0;
            do {
                seen[static_cast<size_t>(h)] = 1;
                slot[static_cast<size_t>(h)] = static_cast<int>(rot[static_cast<size_t>(v)].size());
                rot[static_cast<size_t>(v)].push_back(h);
                h = m.next[static_cast<size_t>(h)];
            } while (h != h0);
        }
    }

    // one mobile edge per inner face, joining its two corners followed by a
    // smaller label along the face orbit
    auto faces = faces_of(m);
    auto ids = face_ids(m, faces);
    const int ext = ids[static_cast<size_t>(m.root_half_edge)];
    std::vector<int> mob(static_cast<size_t>(m.half_edges()), -1);
    for (size_t f = 0; f < faces.size(); ++f) {
        if (static_cast<int>(f) == ext) continue;
        const auto& cyc = faces[f];
        int e0 = -1, e1 = -1;
        for (size_t i = 0; i < cyc.size(); ++i) {
            int a = dist[static_cast<size_t>(m.vert[static_cast<size_t>(cyc[i])])];
            int b = dist[static_cast<size_t>(m.vert[static_cast<size_t>(cyc[(i + 1) % cyc.size()])])];
            if (b == a - 1) (e0 < 0 ? e0 : e1) = cyc[i];
        }
        if (e0 < 0 || e1 < 0) throw std::invalid_argument("encode: inner face without two descents");
        mob[static_cast<size_t>(e0)] = e1;
        mob[static_cast<size_t>(e1)] = e0;
    }

    // recursive tree extraction; children precede the parent slot cyclically
    // (the corner word of the closure runs against the rotation order)
    std::function<WellLabeledTree(int, int)> build = [&](int v, int parent_corner) -> WellLabeledTree {
        WellLabeledTree t;
        t.label = dist[static_cast<size_t>(v)];
        const auto& hl = rot[static_cast<size_t>(v)];
        const int k = static_cast<int>(hl.size());
        const int p0 = slot[static_cast<size_t>(parent_corner)];
        for (int j = 1; j <= k; ++j) {
            int h = hl[static_cast<size_t>(((p0 - j) % k + k) % k)];
            if (h == parent_corner) continue;
            int nb = mob[static_cast<size_t>(h)];
            if (nb < 0) continue;
            t.children.push_back(build(m.vert[static_cast<size_t>(nb)], nb));
        }
        return t;
    };

    std::vector<WellLabeledTree> trees;
    for (int i = 0; i < len; ++i) {
        if (steps[static_cast<size_t>(i)] != -1) continue;
        int h = contour_h[static_cast<size_t>(i)];
        trees.push_back(build(m.vert[static_cast<size_t>(h)], h));
    }
    return BoundaryCode{base, steps, trees};
}

}  // namespace quadbound
