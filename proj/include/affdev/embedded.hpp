#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "affdev/affine.hpp"
#include "affdev/development.hpp"
#include "affdev/errors.hpp"
#include "affdev/geometry.hpp"

namespace affdev {

/// Deterministic, platform-independent generator (splitmix64).
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
};

/// 3D polyhedral surface: vertex coordinates plus ordered face cycles.
/// Faces must be planar (within eps_plan) and strictly convex in their
/// planes; each edge belongs to at most two faces.
struct EmbeddedPolyhedron {
    std::vector<std::string> ids;
    std::vector<Vec3> pos;
    std::vector<std::vector<int>> faces;

    int vertex_count() const { return static_cast<int>(ids.size()); }
    int face_count() const { return static_cast<int>(faces.size()); }

    int vertex_index(const std::string& id) const
    {
        for (int i = 0; i < vertex_count(); ++i)
            if (ids[std::size_t(i)] == id) return i;
        raise(Errc::UnknownVertex, "unknown vertex '" + id + "'");
    }

    double diameter() const
    {
        double d2 = 0.0;
        for (int i = 0; i < vertex_count(); ++i)
            for (int j = i + 1; j < vertex_count(); ++j)
                d2 = std::max(d2, norm2(pos[std::size_t(i)] - pos[std::size_t(j)]));
        return std::sqrt(d2);
    }

    void check_structure() const
    {
        std::set<std::string> seen;
        for (const auto& id : ids)
            if (!seen.insert(id).second) raise(Errc::ParseError, "duplicate vertex id '" + id + "'");
        std::map<std::pair<int, int>, int> edge_uses;
        for (const auto& f : faces) {
            if (f.size() < 3) raise(Errc::ParseError, "face with fewer than 3 vertices");
            std::set<int> uniq(f.begin(), f.end());
            if (uniq.size() != f.size()) raise(Errc::ParseError, "face repeats a vertex");
            for (int v : f)
                if (v < 0 || v >= vertex_count())
                    raise(Errc::DanglingReference, "face references a missing vertex");
            for (std::size_t i = 0; i < f.size(); ++i) {
                int u = f[i], v = f[(i + 1) % f.size()];
                if (u > v) std::swap(u, v);
                if (++edge_uses[{u, v}] > 2)
                    raise(Errc::ParseError, "edge shared by more than two faces");
            }
        }
    }

    static EmbeddedPolyhedron parse(const std::string& text);
    std::string serialize() const;
};

namespace detail {

inline Vec3 newell_normal(const EmbeddedPolyhedron& p, const std::vector<int>& face)
{
    Vec3 n{};
    for (std::size_t i = 0; i < face.size(); ++i) {
        const Vec3 a = p.pos[std::size_t(face[i])];
        const Vec3 b = p.pos[std::size_t(face[(i + 1) % face.size()])];
        n.x += (a.y - b.y) * (a.z + b.z);
        n.y += (a.z - b.z) * (a.x + b.x);
        n.z += (a.x - b.x) * (a.y + b.y);
    }
    return n;
}

inline double face_planarity_error(const EmbeddedPolyhedron& p, const std::vector<int>& face)
{
    const Vec3 n = normalized(newell_normal(p, face));
    const Vec3 origin = p.pos[std::size_t(face[0])];
    double err = 0.0;
    for (int v : face) err = std::max(err, std::fabs(dot(p.pos[std::size_t(v)] - origin, n)));
    return err;
}

}  // namespace detail

/// Isometric flattening of every face into the plane, gluings mirroring the
/// polyhedron's edge adjacencies, one vertex class per polyhedron vertex
/// (same ids). Face k keeps the id "f<k>".
inline Development extract_development(const EmbeddedPolyhedron& p, double eps_plan = 1e-9)
{
    p.check_structure();
    const double scale = p.diameter();
    std::vector<Development::Face> faces;
    std::vector<Development::VertexClass> classes(static_cast<std::size_t>(p.vertex_count()));
    for (int v = 0; v < p.vertex_count(); ++v) classes[std::size_t(v)].id = p.ids[std::size_t(v)];

    for (int f = 0; f < p.face_count(); ++f) {
        const auto& cyc = p.faces[std::size_t(f)];
        if (detail::face_planarity_error(p, cyc) > eps_plan * std::max(scale, 1e-300))
            raise(Errc::NonPlanarFace, "face " + std::to_string(f) + " is not planar");
        const Vec3 origin = p.pos[std::size_t(cyc[0])];
        const Vec3 nrm = normalized(detail::newell_normal(p, cyc));
        Vec3 u = p.pos[std::size_t(cyc[1])] - origin;
        u = normalized(u - dot(u, nrm) * nrm);
        const Vec3 w = cross(nrm, u);
        Development::Face fd;
        fd.id = "f" + std::to_string(f);
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const Vec3 d = p.pos[std::size_t(cyc[i])] - origin;
            fd.polygon.vertices.push_back({dot(d, u), dot(d, w)});
            classes[std::size_t(cyc[i])].corners.push_back({f, static_cast<int>(i)});
        }
        faces.push_back(std::move(fd));
    }

    std::map<std::pair<int, int>, std::vector<EdgeSlot>> by_edge;
    for (int f = 0; f < p.face_count(); ++f) {
        const auto& cyc = p.faces[std::size_t(f)];
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            if (a > b) std::swap(a, b);
            by_edge[{a, b}].push_back({f, static_cast<int>(i)});
        }
    }
    std::vector<Gluing> gluings;
    for (const auto& [key, slots] : by_edge)
        if (slots.size() == 2) gluings.push_back({slots[0], slots[1]});

    return Development(std::move(faces), std::move(gluings), std::move(classes));
}

/// Vertex-wise affine image. Affine maps preserve planarity exactly; the
/// re-check guards numeric drift.
inline EmbeddedPolyhedron apply_affine(const EmbeddedPolyhedron& p, const AffineMap3D& map,
                                       double eps_det = 1e-12, double eps_plan = 1e-9)
{
    if (std::fabs(map.det()) <= eps_det) raise(Errc::DegenerateMap, "affine map is degenerate");
    EmbeddedPolyhedron q = p;
    for (auto& v : q.pos) v = map.apply(v);
    const double scale = q.diameter();
    for (const auto& f : q.faces)
        if (detail::face_planarity_error(q, f) > eps_plan * std::max(scale, 1e-300))
            raise(Errc::NonPlanarFace, "image face lost planarity");
    return q;
}

/// Least-squares affine fit over corresponding vertices; accepted only when
/// the max residual stays below eps_aff * diameter(target) and the fit is
/// nondegenerate. Absence means "not affine-equivalent at this tolerance".
inline std::optional<AffineMap3D> oracle_affine_equivalent(const EmbeddedPolyhedron& p,
                                                           const EmbeddedPolyhedron& q,
                                                           const std::vector<int>& vertex_map,
                                                           double eps_aff = 1e-9,
                                                           double eps_det = 1e-12)
{
    if (static_cast<int>(vertex_map.size()) != p.vertex_count()
        || p.vertex_count() != q.vertex_count())
        return std::nullopt;
    std::vector<Vec3> src, dst;
    for (int v = 0; v < p.vertex_count(); ++v) {
        src.push_back(p.pos[std::size_t(v)]);
        dst.push_back(q.pos[std::size_t(vertex_map[std::size_t(v)])]);
    }
    try {
        auto [map, resid] = fit_affine_map_3d(src, dst);
        if (resid >= eps_aff * q.diameter()) return std::nullopt;
        if (std::fabs(map.det()) <= eps_det) return std::nullopt;
        return map;
    } catch (const Error&) {
        return std::nullopt;
    }
}

/// Identity vertex correspondence by matching ids.
inline std::vector<int> identity_vertex_map(const EmbeddedPolyhedron& p,
                                            const EmbeddedPolyhedron& q)
{
    std::vector<int> m(static_cast<std::size_t>(p.vertex_count()));
    for (int v = 0; v < p.vertex_count(); ++v)
        m[std::size_t(v)] = q.vertex_index(p.ids[std::size_t(v)]);
    return m;
}

// --- generators ------------------------------------------------------------

inline EmbeddedPolyhedron make_bipyramid(int n, double equator_radius, double south_height,
                                         double north_height)
{
    if (n < 3 || equator_radius <= 0 || south_height <= 0 || north_height <= 0)
        raise(Errc::InvalidParams, "bipyramid needs n >= 3 and positive lengths");
    EmbeddedPolyhedron p;
    p.ids.push_back("x0");
    p.pos.push_back({0, 0, -south_height});
    for (int j = 1; j <= n; ++j) {
        const double th = 2.0 * std::numbers::pi * (j - 1) / n;
        p.ids.push_back("x" + std::to_string(j));
        p.pos.push_back({equator_radius * std::cos(th), equator_radius * std::sin(th), 0});
    }
    p.ids.push_back("x" + std::to_string(n + 1));
    p.pos.push_back({0, 0, north_height});
    for (int j = 1; j <= n; ++j) {
        const int jn = j % n + 1;
        p.faces.push_back({0, j, jn});
        p.faces.push_back({n + 1, jn, j});
    }
    return p;
}

/// All edges of length 1: equilateral equator in z = 0, apexes on the axis.
inline EmbeddedPolyhedron make_unit_bipyramid3()
{
    const double r = 1.0 / std::sqrt(3.0);
    const double h = std::sqrt(2.0 / 3.0);
    return make_bipyramid(3, r, h, h);
}

/// Unit triangular bipyramid with the north-pole edge to x1 stretched to
/// edge_target; the displaced apex is trilaterated from the equator.
inline EmbeddedPolyhedron make_perturbed_bipyramid3(double edge_target)
{
    EmbeddedPolyhedron p = make_unit_bipyramid3();
    const Vec3 p1 = p.pos[1], p2 = p.pos[2], p3 = p.pos[3];
    const double L2 = edge_target * edge_target;
    // |q-p1|^2 = L2, |q-p2|^2 = 1, |q-p3|^2 = 1, equator in z = 0.
    const double b1 = (norm2(p2) - norm2(p1) + L2 - 1.0) / 2.0;
    const double b2 = (norm2(p3) - norm2(p1) + L2 - 1.0) / 2.0;
    const Vec2 r1{p2.x - p1.x, p2.y - p1.y}, r2{p3.x - p1.x, p3.y - p1.y};
    const double det = cross(r1, r2);
    if (det == 0.0) raise(Errc::Internal, "degenerate equator");
    const double qx = (b1 * r2.y - b2 * r1.y) / det;
    const double qy = (b2 * r1.x - b1 * r2.x) / det;
    const double z2 = 1.0 - (qx - p2.x) * (qx - p2.x) - (qy - p2.y) * (qy - p2.y);
    if (z2 <= 0.0) raise(Errc::InvalidParams, "perturbed apex is not realizable");
    p.pos[4] = {qx, qy, std::sqrt(z2)};
    return p;
}

inline EmbeddedPolyhedron make_prism(int n, double side, double height)
{
    if (n < 3 || side <= 0 || height <= 0)
        raise(Errc::InvalidParams, "prism needs n >= 3 and positive lengths");
    const double R = side / (2.0 * std::sin(std::numbers::pi / n));
    EmbeddedPolyhedron p;
    for (int j = 0; j < n; ++j) {
        const double th = 2.0 * std::numbers::pi * j / n;
        p.ids.push_back("b" + std::to_string(j));
        p.pos.push_back({R * std::cos(th), R * std::sin(th), 0});
    }
    for (int j = 0; j < n; ++j) {
        const double th = 2.0 * std::numbers::pi * j / n;
        p.ids.push_back("t" + std::to_string(j));
        p.pos.push_back({R * std::cos(th), R * std::sin(th), height});
    }
    std::vector<int> bottom, top;
    for (int j = n - 1; j >= 0; --j) bottom.push_back(j);
    for (int j = 0; j < n; ++j) top.push_back(n + j);
    p.faces.push_back(bottom);
    p.faces.push_back(top);
    for (int j = 0; j < n; ++j)
        p.faces.push_back({j, (j + 1) % n, n + (j + 1) % n, n + j});
    return p;
}

inline EmbeddedPolyhedron make_prism(int n, const PlanarPolygon& base, double height)
{
    if (n != base.size() || n < 3 || height <= 0)
        raise(Errc::InvalidParams, "prism base mismatch");
    EmbeddedPolyhedron p;
    for (int j = 0; j < n; ++j) {
        p.ids.push_back("b" + std::to_string(j));
        p.pos.push_back({base.corner(j).x, base.corner(j).y, 0});
    }
    for (int j = 0; j < n; ++j) {
        p.ids.push_back("t" + std::to_string(j));
        p.pos.push_back({base.corner(j).x, base.corner(j).y, height});
    }
    std::vector<int> bottom, top;
    for (int j = n - 1; j >= 0; --j) bottom.push_back(j);
    for (int j = 0; j < n; ++j) top.push_back(n + j);
    p.faces.push_back(bottom);
    p.faces.push_back(top);
    for (int j = 0; j < n; ++j)
        p.faces.push_back({j, (j + 1) % n, n + (j + 1) % n, n + j});
    return p;
}

inline EmbeddedPolyhedron make_cube() { return make_prism(4, 1.0, 1.0); }

inline EmbeddedPolyhedron make_antiprism(int n, double radius, double height)
{
    if (n < 3 || radius <= 0 || height <= 0)
        raise(Errc::InvalidParams, "antiprism needs n >= 3 and positive lengths");
    EmbeddedPolyhedron p;
    for (int j = 0; j < n; ++j) {
        const double th = 2.0 * std::numbers::pi * j / n;
        p.ids.push_back("b" + std::to_string(j));
        p.pos.push_back({radius * std::cos(th), radius * std::sin(th), -height});
    }
    for (int j = 0; j < n; ++j) {
        const double th = 2.0 * std::numbers::pi * (j + 0.5) / n;
        p.ids.push_back("t" + std::to_string(j));
        p.pos.push_back({radius * std::cos(th), radius * std::sin(th), height});
    }
    std::vector<int> bottom, top;
    for (int j = n - 1; j >= 0; --j) bottom.push_back(j);
    for (int j = 0; j < n; ++j) top.push_back(n + j);
    p.faces.push_back(bottom);
    p.faces.push_back(top);
    for (int j = 0; j < n; ++j) {
        p.faces.push_back({j, (j + 1) % n, n + j});                       // upward triangle
        p.faces.push_back({n + j, (j + 1) % n, n + (j + 1) % n});         // downward triangle
    }
    return p;
}

/// Cyclically ordered faces around each vertex of a closed polyhedron.
inline std::vector<std::vector<int>> vertex_face_fans(const EmbeddedPolyhedron& p)
{
    std::map<std::pair<int, int>, std::vector<int>> faces_of_edge;
    for (int f = 0; f < p.face_count(); ++f) {
        const auto& cyc = p.faces[std::size_t(f)];
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            if (a > b) std::swap(a, b);
            faces_of_edge[{a, b}].push_back(f);
        }
    }
    auto next_in_face = [&](int f, int v) {
        const auto& cyc = p.faces[std::size_t(f)];
        for (std::size_t i = 0; i < cyc.size(); ++i)
            if (cyc[i] == v) return cyc[(i + 1) % cyc.size()];
        raise(Errc::Internal, "vertex not in face");
    };
    auto prev_in_face = [&](int f, int v) {
        const auto& cyc = p.faces[std::size_t(f)];
        for (std::size_t i = 0; i < cyc.size(); ++i)
            if (cyc[i] == v) return cyc[(i + cyc.size() - 1) % cyc.size()];
        raise(Errc::Internal, "vertex not in face");
    };
    auto face_across = [&](int f, int u, int v) {
        int a = u, b = v;
        if (a > b) std::swap(a, b);
        const auto& fs = faces_of_edge.at({a, b});
        if (fs.size() != 2) raise(Errc::Internal, "open edge in closed fan walk");
        return fs[0] == f ? fs[1] : fs[0];
    };

    std::vector<std::vector<int>> fans(static_cast<std::size_t>(p.vertex_count()));
    std::vector<std::vector<int>> touching(static_cast<std::size_t>(p.vertex_count()));
    for (int f = 0; f < p.face_count(); ++f)
        for (int v : p.faces[std::size_t(f)]) touching[std::size_t(v)].push_back(f);
    for (int v = 0; v < p.vertex_count(); ++v) {
        const int f0 = touching[std::size_t(v)].empty() ? -1 : touching[std::size_t(v)][0];
        if (f0 < 0) continue;
        int f = f0;
        do {
            fans[std::size_t(v)].push_back(f);
            f = face_across(f, v, next_in_face(f, v));
        } while (f != f0 && fans[std::size_t(v)].size() <= touching[std::size_t(v)].size());
        if (fans[std::size_t(v)].size() != touching[std::size_t(v)].size())
            raise(Errc::Internal, "vertex fan is not a single cycle");
        (void)prev_in_face;
    }
    return fans;
}

/// Polar dual with respect to the circumsphere; faces of the dual are
/// automatically planar because the dual vertices of the faces around x all
/// lie on the polar plane of x.
inline EmbeddedPolyhedron polar_dual(const EmbeddedPolyhedron& p, double sphere_r2)
{
    EmbeddedPolyhedron d;
    for (int f = 0; f < p.face_count(); ++f) {
        const Vec3 n = normalized(detail::newell_normal(p, p.faces[std::size_t(f)]));
        const double dist = dot(n, p.pos[std::size_t(p.faces[std::size_t(f)][0])]);
        if (std::fabs(dist) < 1e-12) raise(Errc::InvalidParams, "face plane through the center");
        d.ids.push_back("d" + std::to_string(f));
        d.pos.push_back((sphere_r2 / dist) * n);
    }
    const auto fans = vertex_face_fans(p);
    for (int v = 0; v < p.vertex_count(); ++v) d.faces.push_back(fans[std::size_t(v)]);
    return d;
}

/// Dual of a uniform antiprism: 2n planar kites, two apexes of valency n,
/// 2n rim vertices of valency 3.
inline EmbeddedPolyhedron make_trapezohedron(int n)
{
    if (n < 3) raise(Errc::InvalidParams, "trapezohedron needs n >= 3");
    const double c1 = std::cos(std::numbers::pi / n), c2 = std::cos(2.0 * std::numbers::pi / n);
    const double h = std::sqrt(std::max(1e-9, (c1 - c2) / 2.0));
    EmbeddedPolyhedron anti = make_antiprism(n, 1.0, h);
    EmbeddedPolyhedron d = polar_dual(anti, 1.0 + h * h);
    // Friendlier ids: apexes first (duals of the two n-gon faces).
    d.ids[0] = "a0";
    d.ids[1] = "a1";
    for (int j = 0; j < n; ++j) {
        d.ids[std::size_t(2 + 2 * j)] = "u" + std::to_string(j);
        d.ids[std::size_t(3 + 2 * j)] = "l" + std::to_string(j);
    }
    return d;
}

/// Random suspension: convex equator on an axis-aligned ellipse, poles on
/// the z-axis. Convex when the origin is interior, which the jittered
/// angles guarantee.
inline EmbeddedPolyhedron make_random_convex_suspension(int n, std::uint64_t seed)
{
    if (n < 3) raise(Errc::InvalidParams, "suspension needs n >= 3");
    Rng rng(seed);
    const double a = rng.uniform(0.7, 1.5), b = rng.uniform(0.7, 1.5);
    const double hs = rng.uniform(0.5, 1.5), hn = rng.uniform(0.5, 1.5);
    EmbeddedPolyhedron p;
    p.ids.push_back("x0");
    p.pos.push_back({0, 0, -hs});
    for (int j = 1; j <= n; ++j) {
        const double th =
            2.0 * std::numbers::pi * (j - 1) / n + rng.uniform(-0.3, 0.3) * (2.0 * std::numbers::pi / n) * 0.5;
        p.ids.push_back("x" + std::to_string(j));
        p.pos.push_back({a * std::cos(th), b * std::sin(th), 0});
    }
    p.ids.push_back("x" + std::to_string(n + 1));
    p.pos.push_back({0, 0, hn});
    for (int j = 1; j <= n; ++j) {
        const int jn = j % n + 1;
        p.faces.push_back({0, j, jn});
        p.faces.push_back({n + 1, jn, j});
    }
    return p;
}

/// Random nondegenerate affine map with singular values in [0.5, 2], so
/// fits stay well-conditioned.
inline AffineMap3D random_affine_map(Rng& rng)
{
    auto random_orthogonal = [&]() {
        Vec3 v[3];
        for (auto& x : v) {
            // Box-Muller-free gaussian-ish direction sampling: uniform cube
            // rejection to the unit ball, fine for a basis.
            do {
                x = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
            } while (norm2(x) < 1e-4 || norm2(x) > 1.0);
        }
        v[0] = normalized(v[0]);
        v[1] = v[1] - dot(v[1], v[0]) * v[0];
        while (norm2(v[1]) < 1e-6) {
            v[1] = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
            v[1] = v[1] - dot(v[1], v[0]) * v[0];
        }
        v[1] = normalized(v[1]);
        v[2] = cross(v[0], v[1]);
        Mat3 q;
        q.m = {v[0].x, v[1].x, v[2].x, v[0].y, v[1].y, v[2].y, v[0].z, v[1].z, v[2].z};
        return q;
    };
    const Mat3 q1 = random_orthogonal(), q2 = random_orthogonal();
    Mat3 s;
    s.m = {rng.uniform(0.5, 2.0), 0, 0, 0, rng.uniform(0.5, 2.0), 0, 0, 0, rng.uniform(0.5, 2.0)};
    if (rng.uniform() < 0.5) s.m[0] = -s.m[0];  // orientation flips allowed
    AffineMap3D map;
    map.linear = q1 * s * q2;
    map.translation = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    return map;
}

// --- JSON --------------------------------------------------------------

inline EmbeddedPolyhedron EmbeddedPolyhedron::parse(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        raise(Errc::ParseError, e.what());
    }
    try {
        EmbeddedPolyhedron p;
        std::map<std::string, int> idx;
        for (const auto& [id, coords] : j.at("vertices").items()) {
            idx.emplace(id, static_cast<int>(p.ids.size()));
            p.ids.push_back(id);
            p.pos.push_back({coords.at(0).get<double>(), coords.at(1).get<double>(),
                             coords.at(2).get<double>()});
        }
        for (const auto& jf : j.at("faces")) {
            std::vector<int> cyc;
            for (const auto& jv : jf) {
                auto it = idx.find(jv.get<std::string>());
                if (it == idx.end())
                    raise(Errc::DanglingReference, "face references missing vertex");
                cyc.push_back(it->second);
            }
            p.faces.push_back(std::move(cyc));
        }
        p.check_structure();
        return p;
    } catch (const nlohmann::json::exception& e) {
        raise(Errc::ParseError, e.what());
    }
}

inline std::string EmbeddedPolyhedron::serialize() const
{
    nlohmann::ordered_json j;
    auto& jv = j["vertices"] = nlohmann::ordered_json::object();
    std::vector<int> order(static_cast<std::size_t>(vertex_count()));
    for (int i = 0; i < vertex_count(); ++i) order[std::size_t(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return ids[std::size_t(a)] < ids[std::size_t(b)]; });
    for (int i : order)
        jv[ids[std::size_t(i)]] = {pos[std::size_t(i)].x, pos[std::size_t(i)].y, pos[std::size_t(i)].z};
    auto& jf = j["faces"] = nlohmann::ordered_json::array();
    for (const auto& f : faces) {
        nlohmann::ordered_json cyc = nlohmann::ordered_json::array();
        for (int v : f) cyc.push_back(ids[std::size_t(v)]);
        jf.push_back(std::move(cyc));
    }
    return j.dump(2);
}

}  // namespace affdev
