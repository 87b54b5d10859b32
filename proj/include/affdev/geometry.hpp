#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "affdev/errors.hpp"

namespace affdev {

struct Vec2 {
    double x = 0.0, y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::sqrt(norm2(a)); }

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm2(Vec3 a) { return dot(a, a); }
inline double norm(Vec3 a) { return std::sqrt(norm2(a)); }
inline Vec3 normalized(Vec3 a)
{
    const double n = norm(a);
    return {a.x / n, a.y / n, a.z / n};
}

struct Mat2 {
    // row-major
    std::array<double, 4> m{1, 0, 0, 1};

    double det() const { return m[0] * m[3] - m[1] * m[2]; }
    Vec2 apply(Vec2 v) const { return {m[0] * v.x + m[1] * v.y, m[2] * v.x + m[3] * v.y}; }
};

struct Mat3 {
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    double det() const
    {
        return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6])
               + m[2] * (m[3] * m[7] - m[4] * m[6]);
    }
    Vec3 apply(Vec3 v) const
    {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z, m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }
    Mat3 operator*(const Mat3& o) const
    {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0;
                for (int k = 0; k < 3; ++k) s += m[3 * i + k] * o.m[3 * k + j];
                r.m[3 * i + j] = s;
            }
        return r;
    }
};

/// Gaussian elimination with partial pivoting on an n x n system with
/// multiple right-hand sides. Returns false on (numerically) singular input.
inline bool solve_dense(std::vector<double> a, std::vector<double>& rhs, int n, int nrhs,
                        double pivot_tol = 0.0)
{
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int c = 0; c < n; ++c) {
        int p = c;
        for (int r = c + 1; r < n; ++r)
            if (std::fabs(a[r * n + c]) > std::fabs(a[p * n + c])) p = r;
        if (std::fabs(a[p * n + c]) <= pivot_tol) return false;
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(a[p * n + j], a[c * n + j]);
            for (int j = 0; j < nrhs; ++j) std::swap(rhs[p * nrhs + j], rhs[c * nrhs + j]);
        }
        for (int r = c + 1; r < n; ++r) {
            const double f = a[r * n + c] / a[c * n + c];
            if (f == 0.0) continue;
            for (int j = c; j < n; ++j) a[r * n + j] -= f * a[c * n + j];
            for (int j = 0; j < nrhs; ++j) rhs[r * nrhs + j] -= f * rhs[c * nrhs + j];
        }
    }
    for (int c = n - 1; c >= 0; --c) {
        for (int j = 0; j < nrhs; ++j) {
            double s = rhs[c * nrhs + j];
            for (int k = c + 1; k < n; ++k) s -= a[c * n + k] * rhs[k * nrhs + j];
            rhs[c * nrhs + j] = s / a[c * n + c];
        }
    }
    return true;
}

// --- planar polygons ----------------------------------------------------

/// Convex polygon in the plane; corners in consistent (CW or CCW) order.
struct PlanarPolygon {
    std::vector<Vec2> vertices;

    int size() const { return static_cast<int>(vertices.size()); }
    Vec2 corner(int i) const { return vertices[static_cast<std::size_t>(i)]; }
    /// Edge i joins corner i to corner i+1 (mod size).
    double edge_length(int i) const
    {
        return norm(vertices[(i + 1) % size()] - vertices[static_cast<std::size_t>(i)]);
    }
};

/// Strict convexity: every cross product of consecutive edge vectors has the
/// same sign and is nonzero (also rejects repeated vertices).
inline bool strictly_convex(const PlanarPolygon& q)
{
    const int n = q.size();
    if (n < 3) return false;
    int sign = 0;
    for (int i = 0; i < n; ++i) {
        const Vec2 a = q.corner((i + 1) % n) - q.corner(i);
        const Vec2 b = q.corner((i + 2) % n) - q.corner((i + 1) % n);
        if (norm2(a) == 0.0) return false;
        const double c = cross(a, b);
        if (c == 0.0) return false;
        const int s = c > 0 ? 1 : -1;
        if (sign == 0)
            sign = s;
        else if (s != sign)
            return false;
    }
    return true;
}

/// Interior angle at corner i, in (0, pi) for strictly convex polygons.
inline double interior_angle(const PlanarPolygon& q, int i)
{
    const int n = q.size();
    const Vec2 u = q.corner((i + n - 1) % n) - q.corner(i);
    const Vec2 v = q.corner((i + 1) % n) - q.corner(i);
    return std::atan2(std::fabs(cross(u, v)), dot(u, v));
}

inline double polygon_diameter(const PlanarPolygon& q)
{
    double d2 = 0.0;
    for (int i = 0; i < q.size(); ++i)
        for (int j = i + 1; j < q.size(); ++j) d2 = std::max(d2, norm2(q.corner(i) - q.corner(j)));
    return std::sqrt(d2);
}

}  // namespace affdev
