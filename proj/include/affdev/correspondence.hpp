#pragma once

#include <map>
#include <string>
#include <vector>

#include "affdev/affine.hpp"
#include "affdev/development.hpp"
#include "affdev/errors.hpp"

namespace affdev {

/// Incidence-preserving bijection between the elements of two developments.
/// Built from a vertex bijection; face and edge maps are derived and
/// verified. face_corner[f] aligns corners of face f with corners of its
/// image.
struct CombinatorialMap {
    std::vector<int> vertex_map;
    std::vector<int> face_map;
    std::vector<CornerCorrespondence> face_corner;
    std::vector<int> edge_map;

    int vertex_image(int v) const { return vertex_map[std::size_t(v)]; }
    int face_image(int f) const { return face_map[std::size_t(f)]; }

    CombinatorialMap inverse(const Development& a, const Development& b) const
    {
        CombinatorialMap inv;
        inv.vertex_map.assign(vertex_map.size(), -1);
        inv.face_map.assign(face_map.size(), -1);
        inv.edge_map.assign(edge_map.size(), -1);
        inv.face_corner.resize(face_map.size());
        for (std::size_t v = 0; v < vertex_map.size(); ++v)
            inv.vertex_map[std::size_t(vertex_map[v])] = static_cast<int>(v);
        for (std::size_t f = 0; f < face_map.size(); ++f) {
            const int g = face_map[f];
            inv.face_map[std::size_t(g)] = static_cast<int>(f);
            const int m = a.face(static_cast<int>(f)).polygon.size();
            const CornerCorrespondence& c = face_corner[f];
            CornerCorrespondence ic;
            ic.reversed = c.reversed;
            // corner i of f maps to c.image(i); invert on the m-cycle
            ic.offset = c.reversed ? c.offset : (m - c.offset) % m;
            inv.face_corner[std::size_t(g)] = ic;
        }
        for (std::size_t e = 0; e < edge_map.size(); ++e)
            inv.edge_map[std::size_t(edge_map[e])] = static_cast<int>(e);
        (void)b;
        return inv;
    }
};

namespace detail {

struct FaceCandidate {
    int face;
    CornerCorrespondence corr;
};

inline std::vector<FaceCandidate> face_candidates(const Development& a, const Development& b,
                                                  const std::vector<int>& vmap, int f)
{
    std::vector<FaceCandidate> out;
    const int m = a.face(f).polygon.size();
    for (int g = 0; g < b.face_count(); ++g) {
        if (b.face(g).polygon.size() != m) continue;
        for (int rev = 0; rev < 2; ++rev)
            for (int off = 0; off < m; ++off) {
                CornerCorrespondence corr{off, rev == 1};
                bool ok = true;
                for (int i = 0; i < m && ok; ++i)
                    ok = b.corner_class(g, corr.image(i, m))
                         == vmap[std::size_t(a.corner_class(f, i))];
                if (ok) out.push_back({g, corr});
            }
    }
    return out;
}

/// Edge index of the image of slot (f, e) under a face assignment.
inline int image_edge_index(const CornerCorrespondence& corr, int e, int m)
{
    const int j = corr.reversed ? corr.offset - e - 1 : corr.offset + e;
    return ((j % m) + m) % m;
}

}  // namespace detail

/// Extends a total vertex bijection to faces and edges; throws
/// NotCombinatoriallyEquivalent (with a witness in the message) when no
/// incidence-preserving extension exists.
inline CombinatorialMap build_correspondence(const Development& a, const Development& b,
                                             const std::vector<int>& vertex_map)
{
    if (static_cast<int>(vertex_map.size()) != a.vertex_count()
        || a.vertex_count() != b.vertex_count())
        raise(Errc::NotCombinatoriallyEquivalent,
              "vertex counts differ (" + std::to_string(a.vertex_count()) + " vs "
                  + std::to_string(b.vertex_count()) + ")");
    {
        std::vector<bool> hit(static_cast<std::size_t>(b.vertex_count()), false);
        for (int v : vertex_map) {
            if (v < 0 || v >= b.vertex_count() || hit[std::size_t(v)])
                raise(Errc::NotCombinatoriallyEquivalent, "vertex map is not a bijection");
            hit[std::size_t(v)] = true;
        }
    }
    if (a.face_count() != b.face_count())
        raise(Errc::NotCombinatoriallyEquivalent,
              "face counts differ (" + std::to_string(a.face_count()) + " vs "
                  + std::to_string(b.face_count()) + ")");

    std::vector<std::vector<detail::FaceCandidate>> cands(static_cast<std::size_t>(a.face_count()));
    for (int f = 0; f < a.face_count(); ++f) {
        cands[std::size_t(f)] = detail::face_candidates(a, b, vertex_map, f);
        if (cands[std::size_t(f)].empty())
            raise(Errc::NotCombinatoriallyEquivalent,
                  "face '" + a.face(f).id + "' has no corner-class-matching image");
    }

    // Backtracking over face images; a gluing of already-assigned faces must
    // map to a gluing, which prunes hard. Candidate order is deterministic.
    std::vector<int> face_map(static_cast<std::size_t>(a.face_count()), -1);
    std::vector<CornerCorrespondence> face_corner(static_cast<std::size_t>(a.face_count()));
    std::vector<bool> used(static_cast<std::size_t>(b.face_count()), false);
    long nodes = 0;

    auto compatible = [&](int f, const detail::FaceCandidate& cand) {
        const int m = a.face(f).polygon.size();
        for (int e = 0; e < m; ++e) {
            auto p = a.partner({f, e});
            const int ie = detail::image_edge_index(cand.corr, e, m);
            auto ip = b.partner({cand.face, ie});
            if (!p) {
                if (ip) return false;  // boundary edge must stay boundary
                continue;
            }
            if (!ip) return false;
            if (face_map[std::size_t(p->face)] < 0) continue;  // partner not assigned yet
            const int g2 = face_map[std::size_t(p->face)];
            const int m2 = a.face(p->face).polygon.size();
            const int ie2 = detail::image_edge_index(face_corner[std::size_t(p->face)], p->edge, m2);
            if (!(ip->face == g2 && ip->edge == ie2)) return false;
        }
        return true;
    };

    auto search = [&](auto&& self, int f) -> bool {
        if (f == a.face_count()) return true;
        if (++nodes > 100000)
            raise(Errc::NotCombinatoriallyEquivalent, "face assignment search exceeded its cap");
        for (const auto& cand : cands[std::size_t(f)]) {
            if (used[std::size_t(cand.face)]) continue;
            if (!compatible(f, cand)) continue;
            face_map[std::size_t(f)] = cand.face;
            face_corner[std::size_t(f)] = cand.corr;
            used[std::size_t(cand.face)] = true;
            if (self(self, f + 1)) return true;
            used[std::size_t(cand.face)] = false;
            face_map[std::size_t(f)] = -1;
        }
        return false;
    };
    if (!search(search, 0))
        raise(Errc::NotCombinatoriallyEquivalent,
              "no face assignment preserves the gluing structure");

    // Edge map follows from face images.
    std::vector<int> edge_map(static_cast<std::size_t>(a.edge_count()), -1);
    std::vector<bool> edge_hit(static_cast<std::size_t>(b.edge_count()), false);
    if (a.edge_count() != b.edge_count())
        raise(Errc::NotCombinatoriallyEquivalent, "edge counts differ");
    for (int e = 0; e < a.edge_count(); ++e) {
        const EdgeSlot s = a.edge(e).slots[0];
        const int m = a.face(s.face).polygon.size();
        const EdgeSlot is{face_map[std::size_t(s.face)],
                          detail::image_edge_index(face_corner[std::size_t(s.face)], s.edge, m)};
        int ie = -1;
        for (int e2 = 0; e2 < b.edge_count(); ++e2)
            for (const EdgeSlot& bs : b.edge(e2).slots)
                if (bs == is) ie = e2;
        if (ie < 0 || edge_hit[std::size_t(ie)])
            raise(Errc::NotCombinatoriallyEquivalent, "edge map is not a bijection");
        edge_hit[std::size_t(ie)] = true;
        edge_map[std::size_t(e)] = ie;
        // endpoint classes must correspond
        std::vector<int> want;
        for (int v : a.edge(e).endpoints) want.push_back(vertex_map[std::size_t(v)]);
        std::sort(want.begin(), want.end());
        std::vector<int> got = b.edge(ie).endpoints;
        std::sort(got.begin(), got.end());
        if (want != got)
            raise(Errc::NotCombinatoriallyEquivalent,
                  "edge endpoints are not preserved at edge " + std::to_string(e));
    }

    CombinatorialMap map;
    map.vertex_map = vertex_map;
    map.face_map = std::move(face_map);
    map.face_corner = std::move(face_corner);
    map.edge_map = std::move(edge_map);
    return map;
}

/// Name-keyed convenience: bijection given as class-id pairs.
inline CombinatorialMap build_correspondence(const Development& a, const Development& b,
                                             const std::map<std::string, std::string>& by_id)
{
    if (static_cast<int>(by_id.size()) != a.vertex_count())
        raise(Errc::NotCombinatoriallyEquivalent, "vertex map must cover every vertex");
    std::vector<int> vmap(static_cast<std::size_t>(a.vertex_count()), -1);
    for (const auto& [ka, kb] : by_id) vmap[std::size_t(a.vertex_index(ka))] = b.vertex_index(kb);
    return build_correspondence(a, b, vmap);
}

/// Identity-by-name map for developments whose vertex ids coincide.
inline CombinatorialMap identity_correspondence(const Development& a, const Development& b)
{
    std::vector<int> vmap(static_cast<std::size_t>(a.vertex_count()), -1);
    if (a.vertex_count() != b.vertex_count())
        raise(Errc::NotCombinatoriallyEquivalent, "vertex counts differ");
    for (int v = 0; v < a.vertex_count(); ++v)
        vmap[std::size_t(v)] = b.vertex_index(a.vertex(v).id);
    return build_correspondence(a, b, vmap);
}

}  // namespace affdev
