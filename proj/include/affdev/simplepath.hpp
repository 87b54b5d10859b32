#pragma once

#include <optional>
#include <set>
#include <vector>

#include "affdev/affine.hpp"
#include "affdev/correspondence.hpp"
#include "affdev/development.hpp"
#include "affdev/errors.hpp"
#include "affdev/verdict.hpp"

namespace affdev {

/// Walk along development edges; consecutive vertices share an edge, and no
/// edge repeats (vertices may).
struct EdgePath {
    std::vector<int> vertices;
    std::vector<int> edges;  // one fewer than vertices
};

/// True iff the development is closed and every vertex has valency 3.
inline bool is_simple_development(const Development& dev)
{
    if (!dev.closed()) raise(Errc::NotClosed, "simplicity is defined for closed developments");
    for (int v = 0; v < dev.vertex_count(); ++v)
        if (dev.valency(v) != 3) return false;
    return dev.vertex_count() > 0;
}

/// Path through valency-3 vertices whose vertex set touches every face.
/// Depth-first search over the induced subgraph with a node cap; nothing on
/// cap or failure (conservative for the verdict).
inline std::optional<EdgePath> find_gamma_path(const Development& dev,
                                               long node_cap = 1000000)
{
    if (!dev.closed()) raise(Errc::NotClosed, "gamma paths are defined for closed developments");
    const int vcount = dev.vertex_count();
    const int fcount = dev.face_count();
    std::vector<bool> eligible(static_cast<std::size_t>(vcount));
    for (int v = 0; v < vcount; ++v) eligible[std::size_t(v)] = dev.valency(v) == 3;

    std::vector<int> face_cover_count(static_cast<std::size_t>(fcount), 0);
    int covered = 0;
    std::vector<int> path_vertices, path_edges;
    std::vector<bool> edge_used(static_cast<std::size_t>(dev.edge_count()), false);
    long nodes = 0;

    auto cover = [&](int v, int dir) {
        for (int f : dev.vertex_faces(v)) {
            int& c = face_cover_count[std::size_t(f)];
            if (dir > 0 && c++ == 0) ++covered;
            if (dir < 0 && --c == 0) --covered;
        }
    };

    auto dfs = [&](auto&& self, int v) -> bool {
        if (++nodes > node_cap) return false;
        path_vertices.push_back(v);
        cover(v, +1);
        if (covered == fcount) return true;
        for (int e : dev.star(v).edges) {
            if (e < 0 || edge_used[std::size_t(e)]) continue;
            const auto& ends = dev.edge(e).endpoints;
            if (ends.size() != 2) continue;
            const int w = ends[0] == v ? ends[1] : ends[0];
            if (!eligible[std::size_t(w)]) continue;
            edge_used[std::size_t(e)] = true;
            path_edges.push_back(e);
            if (self(self, w)) return true;
            path_edges.pop_back();
            edge_used[std::size_t(e)] = false;
        }
        cover(v, -1);
        path_vertices.pop_back();
        return false;
    };

    for (int v0 = 0; v0 < vcount; ++v0) {
        if (!eligible[std::size_t(v0)]) continue;
        if (dfs(dfs, v0)) return EdgePath{path_vertices, path_edges};
        if (nodes > node_cap) return std::nullopt;
    }
    return std::nullopt;
}

/// First face pair (index in the first development) that fails the
/// corner-based affine test, or nothing when all faces pass.
inline std::optional<int> face_screen(const Development& deva, const Development& devb,
                                      const CombinatorialMap& map, double eps_aff = 1e-9)
{
    for (int f = 0; f < deva.face_count(); ++f) {
        const auto& q = deva.face(f).polygon;
        const auto& qp = devb.face(map.face_image(f)).polygon;
        if (!polygon_affine_equivalent(q, qp, map.face_corner[std::size_t(f)], eps_aff))
            return f;
    }
    return std::nullopt;
}

/// Face-level fast verdict: any failing face pair is an unconditional
/// negative (affine equivalence of polyhedra forces face-wise affine
/// equivalence); a simple development or a covering valency-3 path upgrades
/// face-wise success to a conditional positive (conditional on both
/// polyhedra being strictly convex and closed, which developments alone
/// cannot certify).
inline VerdictKind simple_affine_verdict(const Development& deva, const Development& devb,
                                         const CombinatorialMap& map, double eps_aff = 1e-9)
{
    if (face_screen(deva, devb, map, eps_aff)) return VerdictKind::NotAffineEquivalent;
    if (!deva.closed()) return VerdictKind::Inconclusive;
    if (is_simple_development(deva)) return VerdictKind::AffineEquivalentConditional;
    if (find_gamma_path(deva)) return VerdictKind::AffineEquivalentConditional;
    return VerdictKind::Inconclusive;
}

}  // namespace affdev
