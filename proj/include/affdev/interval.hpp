#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace affdev {

/// Closed interval [lo, hi] with conservative outward rounding.
///
/// Every arithmetic result is widened by one ulp on each side via
/// std::nextafter instead of toggling the FPU rounding mode. That is
/// slightly wider than directed rounding but is immune to compilers
/// reordering code around fesetround, which gcc does not model without
/// FENV_ACCESS support. Enclosures are what certify emptiness downstream,
/// so every operation here must over-approximate, never under-approximate.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    explicit Interval(double x) : lo(x), hi(x) {}
    Interval(double l, double h) : lo(l), hi(h) {}

    static Interval hull(Interval a, Interval b)
    {
        return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
    }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    double mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
    bool empty_as_set() const { return lo > hi; }
};

namespace detail {
inline double down(double x)
{
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
inline double up(double x)
{
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}
}  // namespace detail

inline Interval widen(Interval a) { return {detail::down(a.lo), detail::up(a.hi)}; }

inline Interval operator+(Interval a, Interval b)
{
    return widen({a.lo + b.lo, a.hi + b.hi});
}

inline Interval operator-(Interval a, Interval b)
{
    return widen({a.lo - b.hi, a.hi - b.lo});
}

inline Interval operator-(Interval a) { return {-a.hi, -a.lo}; }

inline Interval operator*(Interval a, Interval b)
{
    const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return widen({std::min(std::min(p1, p2), std::min(p3, p4)),
                  std::max(std::max(p1, p2), std::max(p3, p4))});
}

inline Interval& operator+=(Interval& a, Interval b) { return a = a + b; }
inline Interval& operator-=(Interval& a, Interval b) { return a = a - b; }
inline Interval& operator*=(Interval& a, Interval b) { return a = a * b; }

/// x^2 as a set image (tighter than x*x when x straddles 0).
inline Interval square(Interval a)
{
    if (a.lo >= 0.0) return widen({a.lo * a.lo, a.hi * a.hi});
    if (a.hi <= 0.0) return widen({a.hi * a.hi, a.lo * a.lo});
    const double m = std::max(-a.lo, a.hi);
    return widen({0.0, m * m});
}

/// Division; requires 0 not in b.
inline Interval divide(Interval a, Interval b)
{
    const double p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
    return widen({std::min(std::min(p1, p2), std::min(p3, p4)),
                  std::max(std::max(p1, p2), std::max(p3, p4))});
}

inline Interval intersect(Interval a, Interval b)
{
    return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};  // may be empty_as_set
}

inline bool overlaps(Interval a, Interval b) { return a.lo <= b.hi && b.lo <= a.hi; }

inline Interval pow_nonneg(Interval a, unsigned e)
{
    Interval r(1.0);
    for (unsigned i = 0; i < e; ++i) r = r * a;
    return r;
}

/// Square root of a nonnegative interval (lo clamped at 0).
inline Interval sqrt_nonneg(Interval a)
{
    const double lo = std::sqrt(std::max(0.0, a.lo));
    const double hi = std::sqrt(std::max(0.0, a.hi));
    return {std::max(0.0, detail::down(lo)), detail::up(hi)};
}

}  // namespace affdev
