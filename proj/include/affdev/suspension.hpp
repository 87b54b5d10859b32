#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "affdev/correspondence.hpp"
#include "affdev/development.hpp"
#include "affdev/errors.hpp"
#include "affdev/polynomial.hpp"
#include "affdev/solver.hpp"
#include "affdev/verdict.hpp"

namespace affdev {

/// Pole/equator decomposition of a development whose face lattice matches an
/// n-gonal bipyramid: every equator vertex is incident to both poles, the
/// poles are not incident to each other, and all faces are triangles
/// (pole, x_j, x_j+1).
struct SuspensionStructure {
    int south = -1;
    int north = -1;
    std::vector<int> equator;  // cyclic order x_1 .. x_n

    int n() const { return static_cast<int>(equator.size()); }
};

namespace detail {

inline std::vector<std::set<int>> adjacency(const Development& dev)
{
    std::vector<std::set<int>> adj(static_cast<std::size_t>(dev.vertex_count()));
    for (int e = 0; e < dev.edge_count(); ++e) {
        const auto& ends = dev.edge(e).endpoints;
        if (ends.size() == 2) {
            adj[std::size_t(ends[0])].insert(ends[1]);
            adj[std::size_t(ends[1])].insert(ends[0]);
        }
    }
    return adj;
}

inline bool all_faces_triangular(const Development& dev)
{
    for (int f = 0; f < dev.face_count(); ++f)
        if (dev.face(f).polygon.size() != 3) return false;
    return true;
}

/// Validates a candidate pole pair and, on success, returns the equator in
/// deterministic cyclic order (lowest id first, toward its lower-id
/// neighbor).
inline std::optional<SuspensionStructure> try_poles(const Development& dev,
                                                    const std::vector<std::set<int>>& adj,
                                                    int south, int north)
{
    const int vcount = dev.vertex_count();
    const int n = vcount - 2;
    if (n < 3) return std::nullopt;
    if (adj[std::size_t(south)].count(north) || south == north) return std::nullopt;
    std::vector<int> eq;
    for (int v = 0; v < vcount; ++v) {
        if (v == south || v == north) continue;
        if (!adj[std::size_t(v)].count(south) || !adj[std::size_t(v)].count(north))
            return std::nullopt;
        eq.push_back(v);
    }
    // Equator must be a single cycle: each member adjacent to exactly two
    // other members.
    std::set<int> eqset(eq.begin(), eq.end());
    std::vector<std::vector<int>> ring(static_cast<std::size_t>(dev.vertex_count()));
    for (int v : eq) {
        for (int w : adj[std::size_t(v)])
            if (eqset.count(w)) ring[std::size_t(v)].push_back(w);
        if (ring[std::size_t(v)].size() != 2) return std::nullopt;
    }
    SuspensionStructure s;
    s.south = south;
    s.north = north;
    int start = *std::min_element(eq.begin(), eq.end());
    int prev = start;
    int cur = std::min(ring[std::size_t(start)][0], ring[std::size_t(start)][1]);
    s.equator.push_back(start);
    while (cur != start) {
        s.equator.push_back(cur);
        const auto& r = ring[std::size_t(cur)];
        const int next = (r[0] == prev) ? r[1] : r[0];
        prev = cur;
        cur = next;
        if (static_cast<int>(s.equator.size()) > n) return std::nullopt;
    }
    if (static_cast<int>(s.equator.size()) != n) return std::nullopt;
    // Face lattice: every face must be (pole, consecutive equator pair).
    std::set<std::set<int>> expected;
    for (int j = 0; j < n; ++j) {
        const int a = s.equator[std::size_t(j)], b = s.equator[std::size_t((j + 1) % n)];
        expected.insert({south, a, b});
        expected.insert({north, a, b});
    }
    std::set<std::set<int>> actual;
    for (int f = 0; f < dev.face_count(); ++f) {
        std::set<int> cls;
        for (int c = 0; c < dev.face(f).polygon.size(); ++c) cls.insert(dev.corner_class(f, c));
        actual.insert(std::move(cls));
    }
    if (actual != expected) return std::nullopt;
    return s;
}

}  // namespace detail

/// All valid pole pairings (an octahedral development has three).
inline std::vector<SuspensionStructure> detect_all_suspensions(const Development& dev)
{
    std::vector<SuspensionStructure> out;
    if (!dev.closed() || !detail::all_faces_triangular(dev)) return out;
    const int n = dev.vertex_count() - 2;
    if (n < 3 || dev.face_count() != 2 * n) return out;
    const auto adj = detail::adjacency(dev);
    for (int s = 0; s < dev.vertex_count(); ++s)
        for (int t = s + 1; t < dev.vertex_count(); ++t)
            if (auto st = detail::try_poles(dev, adj, s, t)) out.push_back(*st);
    return out;
}

/// Deterministic choice: the valid pairing with the lowest south pole id.
inline std::optional<SuspensionStructure> detect_suspension(const Development& dev)
{
    auto all = detect_all_suspensions(dev);
    if (all.empty()) return std::nullopt;
    return all.front();
}

/// Image of a suspension structure under a combinatorial map, verified
/// against the target development.
inline SuspensionStructure map_suspension(const SuspensionStructure& s,
                                          const CombinatorialMap& map, const Development& target)
{
    SuspensionStructure t;
    t.south = map.vertex_image(s.south);
    t.north = map.vertex_image(s.north);
    for (int v : s.equator) t.equator.push_back(map.vertex_image(v));
    const auto adj = detail::adjacency(target);
    if (adj[std::size_t(t.south)].count(t.north))
        raise(Errc::NotASuspension, "mapped poles are incident");
    for (int v : t.equator)
        if (!adj[std::size_t(v)].count(t.south) || !adj[std::size_t(v)].count(t.north))
            raise(Errc::NotASuspension, "mapped equator vertex misses a pole");
    return t;
}

/// q_j as an explicit polynomial in the single variable u = t^2, where t is
/// the unknown pole-to-pole distance; j is 1-based. Evaluating at the true
/// squared pole distance gives the bordered determinant of tetrahedron T_j.
inline Poly suspension_polynomial(const Development& dev, const SuspensionStructure& s, int j)
{
    const int n = s.n();
    if (j < 1 || j > n) raise(Errc::InvalidParams, "suspension polynomial index out of range");
    const int xj = s.equator[std::size_t(j - 1)];
    const int xj1 = s.equator[std::size_t(j % n)];
    const int pts[4] = {s.south, xj, xj1, s.north};
    constexpr int N = 5;
    std::vector<Poly> m(N * N, Poly(1));
    for (int i = 1; i < N; ++i) {
        m[std::size_t(i)] = Poly::constant(1, Interval(1.0));
        m[std::size_t(i * N)] = Poly::constant(1, Interval(1.0));
    }
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            if (a == b) continue;
            Poly entry = ((a == 0 && b == 3) || (a == 3 && b == 0))
                             ? Poly::variable(1, 0)
                             : Poly::constant(1, dev.cofacial_distance2(pts[a], pts[b]));
            m[std::size_t((a + 1) * N + (b + 1))] = entry;
        }
    return det_poly(m, N);
}

namespace detail {

inline Poly lift_vars(const Poly& p, int nvars, int var)
{
    // reindex a 1-variable polynomial into a wider variable space
    Poly out(nvars);
    for (const auto& t : p.terms()) {
        Poly term = Poly::constant(nvars, t.c);
        for (int e = 0; e < t.e[0]; ++e) term = term * Poly::variable(nvars, var);
        out = out + term;
    }
    return out;
}

}  // namespace detail

/// System (n equations over {delta, u, u'}) expressing that corresponding
/// suspension tetrahedra have volumes in a common squared ratio delta.
inline PolySystem suspension_system(const Development& deva, const Development& devb,
                                    const CombinatorialMap& map,
                                    const SuspensionStructure* given = nullptr)
{
    std::optional<SuspensionStructure> sa =
        given ? std::optional<SuspensionStructure>(*given) : detect_suspension(deva);
    if (!sa) raise(Errc::NotASuspension, "first development is not a suspension");
    const SuspensionStructure sb = map_suspension(*sa, map, devb);

    PolySystem sys;
    sys.vars = {"delta", "u", "up"};
    sys.alpha_index = 0;
    const Poly delta = Poly::variable(3, 0);
    for (int j = 1; j <= sa->n(); ++j) {
        const Poly qj = detail::lift_vars(suspension_polynomial(deva, *sa, j), 3, 1);
        const Poly qjp = detail::lift_vars(suspension_polynomial(devb, sb, j), 3, 2);
        sys.equations.push_back(qjp - delta * qj);
    }
    return sys;
}

/// Search box: delta in [1/bound, bound]; each squared pole distance bounded
/// through every equator vertex by the triangle inequality.
inline IntervalBox suspension_feasible_box(const Development& deva, const SuspensionStructure& sa,
                                           const Development& devb, const SuspensionStructure& sb,
                                           const SolverConfig& cfg)
{
    auto pole_bounds = [](const Development& dev, const SuspensionStructure& s) {
        double lo = 0.0, hi = -1.0;
        for (int v : s.equator) {
            const Interval da = sqrt_nonneg(dev.cofacial_distance2(s.south, v));
            const Interval db = sqrt_nonneg(dev.cofacial_distance2(v, s.north));
            hi = (hi < 0.0) ? (da.hi + db.hi) : std::min(hi, da.hi + db.hi);
            lo = std::max(lo, std::max(da.lo - db.hi, db.lo - da.hi));
        }
        lo = std::max(0.0, lo);
        return Interval{std::max(0.0, detail::down(lo * lo)),
                        detail::up(detail::up(hi) * detail::up(hi))};
    };
    IntervalBox box;
    box.v.push_back({1.0 / cfg.alpha_bound, cfg.alpha_bound});
    box.v.push_back(pole_bounds(deva, sa));
    box.v.push_back(pole_bounds(devb, sb));
    return box;
}

struct SuspensionCertificate {
    VerdictKind verdict = VerdictKind::Inconclusive;
    SolveResult solve;
    SuspensionStructure structure;        // on the first development
    SuspensionStructure structure_image;  // on the second
};

/// One-directional certificate: a certified-empty ratio system proves the
/// polyhedra are not affine-equivalent; anything else is inconclusive.
inline SuspensionCertificate suspension_certificate(const Development& deva,
                                                    const Development& devb,
                                                    const CombinatorialMap& map,
                                                    const SolverConfig& cfg,
                                                    const SuspensionStructure* given = nullptr)
{
    std::optional<SuspensionStructure> sa =
        given ? std::optional<SuspensionStructure>(*given) : detect_suspension(deva);
    if (!sa) raise(Errc::NotASuspension, "first development is not a suspension");
    const SuspensionStructure sb = map_suspension(*sa, map, devb);
    const PolySystem sys = suspension_system(deva, devb, map, &*sa);
    const IntervalBox box = suspension_feasible_box(deva, *sa, devb, sb, cfg);

    SuspensionCertificate cert;
    cert.structure = *sa;
    cert.structure_image = sb;
    cert.solve = solve_positive(sys, box, cfg);
    cert.verdict = (cert.solve.status == SolveStatus::CertifiedEmpty)
                       ? VerdictKind::NotAffineEquivalent
                       : VerdictKind::Inconclusive;
    return cert;
}

}  // namespace affdev
