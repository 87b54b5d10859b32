#pragma once

#include <optional>
#include <span>
#include <vector>

#include "affdev/errors.hpp"
#include "affdev/geometry.hpp"

namespace affdev {

struct AffineMap2D {
    Mat2 linear;
    Vec2 translation;

    Vec2 apply(Vec2 p) const { return linear.apply(p) + translation; }
    double det() const { return linear.det(); }
};

struct AffineMap3D {
    Mat3 linear;
    Vec3 translation;

    Vec3 apply(Vec3 p) const { return linear.apply(p) + translation; }
    double det() const { return linear.det(); }
};

/// Corner bijection between two equal-size convex polygons: corner i of the
/// source corresponds to corner offset + i (mod m), or offset - i when
/// reversed.
struct CornerCorrespondence {
    int offset = 0;
    bool reversed = false;

    int image(int i, int m) const
    {
        const int j = reversed ? offset - i : offset + i;
        return ((j % m) + m) % m;
    }
};

namespace detail {

inline std::optional<AffineMap2D> affine_from_three(const Vec2* src, const Vec2* dst)
{
    const Vec2 u = src[1] - src[0], v = src[2] - src[0];
    const double d = cross(u, v);
    if (d == 0.0) return std::nullopt;
    const Vec2 up = dst[1] - dst[0], vp = dst[2] - dst[0];
    // L * u = up, L * v = vp
    Mat2 L;
    L.m[0] = (up.x * v.y - vp.x * u.y) / d;
    L.m[1] = (vp.x * u.x - up.x * v.x) / d;
    L.m[2] = (up.y * v.y - vp.y * u.y) / d;
    L.m[3] = (vp.y * u.x - up.y * v.x) / d;
    AffineMap2D map;
    map.linear = L;
    map.translation = dst[0] - L.apply(src[0]);
    return map;
}

}  // namespace detail

/// Constructs the unique affine map sending corners 0,1,2 of q to their
/// images and accepts it only if every remaining corner lands within
/// eps_aff * diameter(qp) of its image.
inline std::optional<AffineMap2D> polygon_affine_equivalent(const PlanarPolygon& q,
                                                            const PlanarPolygon& qp,
                                                            const CornerCorrespondence& corr,
                                                            double eps_aff = 1e-9)
{
    const int m = q.size();
    if (m != qp.size()) return std::nullopt;
    Vec2 src[3], dst[3];
    for (int i = 0; i < 3; ++i) {
        src[i] = q.corner(i);
        dst[i] = qp.corner(corr.image(i, m));
    }
    auto map = detail::affine_from_three(src, dst);
    if (!map) raise(Errc::DegenerateBase, "first three corners are collinear");
    const double tol = eps_aff * polygon_diameter(qp);
    for (int i = 3; i < m; ++i) {
        const Vec2 img = map->apply(q.corner(i));
        if (norm(img - qp.corner(corr.image(i, m))) > tol) return std::nullopt;
    }
    return map;
}

/// Least-squares affine fit of targets ~ A(sources). Exact interpolation for
/// four affinely independent sources. Returns the map and the max pointwise
/// error. Throws RankDeficient when the sources do not span 3-space.
inline std::pair<AffineMap3D, double> fit_affine_map_3d(std::span<const Vec3> sources,
                                                        std::span<const Vec3> targets)
{
    const std::size_t n = sources.size();
    if (n < 4 || n != targets.size()) raise(Errc::InvalidParams, "need >= 4 paired points");
    // Normal equations for [x y z 1] -> target, one shared 4x4 system.
    std::vector<double> m(16, 0.0), rhs(12, 0.0);
    auto row = [](const Vec3& p) { return std::array<double, 4>{p.x, p.y, p.z, 1.0}; };
    double scale2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = row(sources[i]);
        scale2 = std::max(scale2, norm2(sources[i]));
        const double t[3] = {targets[i].x, targets[i].y, targets[i].z};
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) m[std::size_t(4 * a + b)] += r[std::size_t(a)] * r[std::size_t(b)];
            for (int c = 0; c < 3; ++c) rhs[std::size_t(3 * a + c)] += r[std::size_t(a)] * t[c];
        }
    }
    const double pivot_tol = 1e-12 * std::max(1.0, scale2) * double(n);
    if (!solve_dense(m, rhs, 4, 3, pivot_tol)) raise(Errc::RankDeficient, "sources lie in a plane");
    AffineMap3D map;
    for (int c = 0; c < 3; ++c) {
        map.linear.m[std::size_t(3 * c + 0)] = rhs[std::size_t(0 + c)];
        map.linear.m[std::size_t(3 * c + 1)] = rhs[std::size_t(3 + c)];
        map.linear.m[std::size_t(3 * c + 2)] = rhs[std::size_t(6 + c)];
    }
    map.translation = {rhs[9], rhs[10], rhs[11]};
    double resid = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        resid = std::max(resid, norm(map.apply(sources[i]) - targets[i]));
    return {map, resid};
}

}  // namespace affdev
