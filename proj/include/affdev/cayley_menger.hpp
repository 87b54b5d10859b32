#pragma once

#include <cmath>
#include <cstdlib>
#include <type_traits>
#include <vector>

#include "affdev/errors.hpp"

namespace affdev {

/// Squared-distance table for k+1 labeled points spanning (at most) R^k.
/// d2(i, j) carries the squared distance between points i and j.
template <class S>
struct DistanceSpec {
    int k = 0;
    std::vector<S> table;  // (k+1) x (k+1), row-major

    explicit DistanceSpec(int dim) : k(dim), table(std::size_t((dim + 1) * (dim + 1)), S(0)) {}

    int points() const { return k + 1; }
    S& d2(int i, int j) { return table[std::size_t(i * (k + 1) + j)]; }
    const S& d2(int i, int j) const { return table[std::size_t(i * (k + 1) + j)]; }
    void set(int i, int j, const S& v)
    {
        d2(i, j) = v;
        d2(j, i) = v;
    }
};

namespace detail {

/// Division-free determinant by minor expansion; fine for the n <= 6
/// matrices this library builds, and valid over any commutative ring.
template <class S>
S laplace_det(std::vector<S>& a, std::vector<int>& cols, int row, int n)
{
    const int m = n - row;
    if (m == 1) return a[std::size_t(row * n + cols[0])];
    S acc(0);
    for (int ci = 0; ci < m; ++ci) {
        const S& pivot = a[std::size_t(row * n + cols[std::size_t(ci)])];
        if (pivot == S(0)) continue;
        int saved = cols[std::size_t(ci)];
        cols.erase(cols.begin() + ci);
        S sub = laplace_det(a, cols, row + 1, n);
        cols.insert(cols.begin() + ci, saved);
        S term = pivot * sub;
        if (ci % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

template <class S>
S det_by_elimination(std::vector<S> a, int n)
{
    // Partial pivoting keeps floating-point elimination stable; exact
    // scalars only need a nonzero pivot.
    S det(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        if constexpr (std::is_floating_point_v<S>) {
            double best = 0.0;
            for (int r = c; r < n; ++r) {
                const double v = std::fabs(a[std::size_t(r * n + c)]);
                if (p < 0 || v > best) {
                    best = v;
                    p = r;
                }
            }
            if (best == 0.0) return S(0);
        } else {
            for (int r = c; r < n; ++r)
                if (a[std::size_t(r * n + c)] != S(0)) {
                    p = r;
                    break;
                }
            if (p < 0) return S(0);
        }
        if (p != c) {
            for (int j = 0; j < n; ++j)
                std::swap(a[std::size_t(p * n + j)], a[std::size_t(c * n + j)]);
            det = -det;
        }
        const S piv = a[std::size_t(c * n + c)];
        det *= piv;
        for (int r = c + 1; r < n; ++r) {
            const S f = a[std::size_t(r * n + c)] / piv;
            if (f == S(0)) continue;
            for (int j = c; j < n; ++j) a[std::size_t(r * n + j)] -= f * a[std::size_t(c * n + j)];
        }
    }
    return det;
}

template <class S>
std::vector<S> bordered_matrix(const DistanceSpec<S>& spec)
{
    const int n = spec.points() + 1;
    std::vector<S> a(static_cast<std::size_t>(n * n), S(0));
    for (int i = 1; i < n; ++i) {
        a[std::size_t(i)] = S(1);
        a[std::size_t(i * n)] = S(1);
    }
    for (int i = 0; i < spec.points(); ++i)
        for (int j = 0; j < spec.points(); ++j)
            if (i != j) a[std::size_t((i + 1) * n + (j + 1))] = spec.d2(i, j);
    return a;
}

inline long long int_pow2(int k) { return 1LL << k; }
inline long long factorial(int k)
{
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace detail

/// Bordered determinant of the squared-distance table: the scalar that
/// encodes both simplex volume and realizability.
template <class S>
S cayley_menger_det(const DistanceSpec<S>& spec)
{
    auto a = detail::bordered_matrix(spec);
    const int n = spec.points() + 1;
    if constexpr (std::is_floating_point_v<S>) {
        return detail::det_by_elimination(std::move(a), n);
    } else {
        std::vector<int> cols(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) cols[std::size_t(i)] = i;
        return detail::laplace_det(a, cols, 0, n);
    }
}

/// vol^2 = (-1)^{k+1} / (2^k (k!)^2) * cm. Exact for exact scalars.
template <class S>
S simplex_volume_squared(const DistanceSpec<S>& spec)
{
    S cm = cayley_menger_det(spec);
    if (spec.k % 2 == 0) cm = -cm;  // (-1)^{k+1}
    const S denom = S(detail::int_pow2(spec.k)) * S(detail::factorial(spec.k))
                    * S(detail::factorial(spec.k));
    return cm / denom;
}

/// k-dimensional volume of the simplex realizing the spec.
/// Throws NegativeSquaredVolume when the signed expression is measurably
/// negative, i.e. the table is not realizable.
inline double simplex_volume(const DistanceSpec<double>& spec, double eps_vol = 1e-12)
{
    const double v2 = simplex_volume_squared(spec);
    double scale = 1.0;
    for (int i = 0; i < spec.points(); ++i)
        for (int j = i + 1; j < spec.points(); ++j) scale = std::max(scale, spec.d2(i, j));
    double tol = eps_vol;
    for (int i = 0; i < spec.k; ++i) tol *= scale;  // vol^2 has units (d^2)^k
    if (v2 < -tol) raise(Errc::NegativeSquaredVolume, "distance table is not realizable");
    return std::sqrt(std::max(0.0, v2));
}

/// Realizability of a nondegenerate simplex: (-1)^{k+1} cm > 0.
template <class S>
bool realizable_simplex(const DistanceSpec<S>& spec)
{
    S cm = cayley_menger_det(spec);
    if (spec.k % 2 == 0) cm = -cm;
    return cm > S(0);
}

}  // namespace affdev
