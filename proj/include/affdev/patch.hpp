#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "affdev/development.hpp"
#include "affdev/errors.hpp"
#include "affdev/interval.hpp"
#include "affdev/polynomial.hpp"
#include "affdev/solver.hpp"

namespace affdev {

enum class ValencyClass { N3, N4, N5plus };

inline const char* to_string(ValencyClass c)
{
    switch (c) {
    case ValencyClass::N3: return "N3";
    case ValencyClass::N4: return "N4";
    case ValencyClass::N5plus: return "N5plus";
    }
    return "?";
}

/// Three consecutive star faces around a center vertex, with the rim
/// vertices the local distance formulas consume (3 of them at valency 3,
/// otherwise 4).
struct Patch {
    int center = -1;
    int window = 0;
    std::array<int, 3> faces{};
    std::vector<int> rim;
    ValencyClass vclass = ValencyClass::N3;
    bool degenerate = false;  // repeated rim classes; formulas do not apply
};

/// All windows of three consecutive faces in star order: n cyclic windows
/// for an interior vertex of valency n (one after deduplication when n = 3),
/// f - 2 linear windows for a boundary vertex with f faces.
inline std::vector<Patch> enumerate_patches(const Development& dev, int v)
{
    const Development::Star& st = dev.star(v);
    const int f = static_cast<int>(st.faces.size());
    if (f < 3)
        raise(Errc::TooFewFaces,
              "vertex '" + dev.vertex(v).id + "' has " + std::to_string(f) + " faces");
    if (!st.valid) raise(Errc::Internal, "vertex star is not a single fan");

    const int valency = dev.valency(v);
    const ValencyClass vc = valency == 3   ? ValencyClass::N3
                            : valency == 4 ? ValencyClass::N4
                                           : ValencyClass::N5plus;
    std::vector<Patch> out;
    auto push_window = [&](int k, bool cyclic) {
        Patch p;
        p.center = v;
        p.window = k;
        p.vclass = vc;
        const int rim_n = static_cast<int>(st.rim.size());
        for (int i = 0; i < 3; ++i)
            p.faces[std::size_t(i)] = st.faces[std::size_t((k + i) % f)];
        const int rim_count = (vc == ValencyClass::N3) ? 3 : 4;
        for (int i = 0; i < rim_count; ++i)
            p.rim.push_back(st.rim[std::size_t(cyclic ? (k + i) % rim_n : k + i)]);
        std::set<int> uniq(p.rim.begin(), p.rim.end());
        uniq.insert(v);
        p.degenerate = uniq.size() != p.rim.size() + 1;
        out.push_back(std::move(p));
    };

    if (st.closed) {
        const int windows = (valency == 3) ? 1 : f;  // rotations coincide at valency 3
        for (int k = 0; k < windows; ++k) push_window(k, true);
    } else {
        for (int k = 0; k + 2 < f; ++k) push_window(k, false);
    }
    return out;
}

/// Squared cofacial distances among {center, rim...}, with the free slots of
/// the §-case analysis left empty: {(1,3),(2,4)} at valency 4 and
/// {(1,3),(2,4),(1,4)} at valency >= 5. At valency 4 the pair (1,4) is
/// filled from the ambient star's fourth face.
struct PatchDistances {
    ValencyClass vclass = ValencyClass::N3;
    int points = 4;  // center plus rim
    std::array<std::array<std::optional<Interval>, 5>, 5> d2{};

    bool known(int i, int j) const { return d2[std::size_t(i)][std::size_t(j)].has_value(); }
    Interval get(int i, int j) const { return *d2[std::size_t(i)][std::size_t(j)]; }
    double mid(int i, int j) const { return get(i, j).mid(); }
};

inline PatchDistances patch_distances(const Development& dev, const Patch& z)
{
    if (z.degenerate) raise(Errc::InvalidParams, "patch rim repeats a vertex");
    PatchDistances d;
    d.vclass = z.vclass;
    d.points = 1 + static_cast<int>(z.rim.size());
    std::vector<int> ids;
    ids.push_back(z.center);
    for (int r : z.rim) ids.push_back(r);

    auto feed = [&](int i, int j) {
        // surfaces InconsistentDistance before the enclosure is taken
        dev.cofacial_distance(ids[std::size_t(i)], ids[std::size_t(j)]);
        const Interval e = dev.cofacial_distance2(ids[std::size_t(i)], ids[std::size_t(j)]);
        d.d2[std::size_t(i)][std::size_t(j)] = e;
        d.d2[std::size_t(j)][std::size_t(i)] = e;
    };

    for (int i = 0; i < d.points; ++i)
        for (int j = i + 1; j < d.points; ++j) {
            const bool free_pair =
                (d.vclass == ValencyClass::N4 && ((i == 1 && j == 3) || (i == 2 && j == 4)))
                || (d.vclass == ValencyClass::N5plus
                    && ((i == 1 && j == 3) || (i == 2 && j == 4) || (i == 1 && j == 4)));
            if (!free_pair) feed(i, j);
        }
    return d;
}

namespace detail {

/// Enclosure determinant of a small matrix of intervals, via the
/// division-free polynomial determinant with zero variables.
inline Interval cm_det_interval(const std::vector<Interval>& entries, int n)
{
    std::vector<Poly> m;
    m.reserve(entries.size());
    for (const Interval& e : entries) m.push_back(Poly::constant(0, e));
    return det_poly(m, n).eval({});
}

/// Bordered CM matrix over a subset of patch points, as polynomials in the
/// system variables. Free pairs map to the squared-diagonal variables
/// var_base + {0: (1,3), 1: (2,4), 2: (1,4)}.
inline std::vector<Poly> cm_poly_matrix(const PatchDistances& zd, const std::vector<int>& pts,
                                        int nvars, int var_base)
{
    const int k = static_cast<int>(pts.size());
    const int n = k + 1;
    std::vector<Poly> m(static_cast<std::size_t>(n * n), Poly(nvars));
    for (int i = 1; i < n; ++i) {
        m[std::size_t(i)] = Poly::constant(nvars, Interval(1.0));
        m[std::size_t(i * n)] = Poly::constant(nvars, Interval(1.0));
    }
    auto free_var = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        if (a == 1 && b == 3) return var_base + 0;
        if (a == 2 && b == 4) return var_base + 1;
        if (a == 1 && b == 4) return var_base + 2;
        raise(Errc::Internal, "unexpected free pair");
    };
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            const int a = pts[std::size_t(i)], b = pts[std::size_t(j)];
            Poly entry = zd.known(a, b) ? Poly::constant(nvars, zd.get(a, b))
                                        : Poly::variable(nvars, free_var(a, b));
            m[std::size_t((i + 1) * n + (j + 1))] = entry;
        }
    return m;
}

inline Poly cm_poly(const PatchDistances& zd, const std::vector<int>& pts, int nvars, int var_base)
{
    const int n = static_cast<int>(pts.size()) + 1;
    return det_poly(cm_poly_matrix(zd, pts, nvars, var_base), n);
}

inline Interval cm_interval_all_known(const PatchDistances& zd, const std::vector<int>& pts)
{
    const int k = static_cast<int>(pts.size());
    const int n = k + 1;
    std::vector<Interval> m(static_cast<std::size_t>(n * n), Interval(0.0));
    for (int i = 1; i < n; ++i) {
        m[std::size_t(i)] = Interval(1.0);
        m[std::size_t(i * n)] = Interval(1.0);
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j)
                m[std::size_t((i + 1) * n + (j + 1))] =
                    zd.get(pts[std::size_t(i)], pts[std::size_t(j)]);
    return cm_det_interval(m, n);
}

}  // namespace detail

/// The two valency-3 bordered determinants; positive for realizable stars.
inline std::pair<double, double> patch_scalar_n3(const PatchDistances& zd,
                                                 const PatchDistances& zdp)
{
    if (zd.vclass != ValencyClass::N3 || zdp.vclass != ValencyClass::N3)
        raise(Errc::InvalidParams, "valency-3 scalars need valency-3 patches");
    const std::vector<int> pts{0, 1, 2, 3};
    return {detail::cm_interval_all_known(zd, pts).mid(),
            detail::cm_interval_all_known(zdp, pts).mid()};
}

/// Enclosure version of the valency-3 determinant pair.
inline std::pair<Interval, Interval> patch_scalar_n3_interval(const PatchDistances& zd,
                                                              const PatchDistances& zdp)
{
    const std::vector<int> pts{0, 1, 2, 3};
    return {detail::cm_interval_all_known(zd, pts), detail::cm_interval_all_known(zdp, pts)};
}

/// Volume ratio at a valency-3 vertex, normalized as (det A)^2 = q'/q.
/// Throws Unrealizable when either determinant fails to be positive: such a
/// patch pair cannot come from polyhedra with nondegenerate vertex stars.
inline double alpha_n3(double q3, double q3p)
{
    if (q3 <= 0.0 || q3p <= 0.0)
        raise(Errc::Unrealizable, "valency-3 patch determinant is not positive");
    return q3p / q3;
}

/// Five ratio equations q'_j = alpha * q_j over {alpha, u, v, u', v'}:
/// u = t^2 and v = s^2 are the squared small diagonals (1,3) and (2,4).
inline PolySystem patch_system_n4(const PatchDistances& zd, const PatchDistances& zdp)
{
    if (zd.vclass != ValencyClass::N4 || zdp.vclass != ValencyClass::N4)
        raise(Errc::InvalidParams, "valency-4 system needs valency-4 patches");
    PolySystem sys;
    sys.vars = {"alpha", "u", "v", "up", "vp"};
    sys.alpha_index = 0;
    const int nv = 5;
    const Poly alpha = Poly::variable(nv, 0);
    for (int j = 0; j < 5; ++j) {
        std::vector<int> pts;
        for (int i = 0; i < 5; ++i)
            if (i != j) pts.push_back(i);
        const Poly qj = detail::cm_poly(zd, pts, nv, 1);
        const Poly qjp = detail::cm_poly(zdp, pts, nv, 3);
        sys.equations.push_back(qjp - alpha * qj);
    }
    return sys;
}

/// Five ratio equations plus the two degenerate 4-simplex constraints, over
/// {alpha, u, v, w, u', v', w'} with w = r^2 the squared diagonal (1,4).
inline PolySystem patch_system_n5(const PatchDistances& zd, const PatchDistances& zdp)
{
    if (zd.vclass != ValencyClass::N5plus || zdp.vclass != ValencyClass::N5plus)
        raise(Errc::InvalidParams, "valency-5 system needs valency >= 5 patches");
    PolySystem sys;
    sys.vars = {"alpha", "u", "v", "w", "up", "vp", "wp"};
    sys.alpha_index = 0;
    const int nv = 7;
    const Poly alpha = Poly::variable(nv, 0);
    for (int j = 0; j < 5; ++j) {
        std::vector<int> pts;
        for (int i = 0; i < 5; ++i)
            if (i != j) pts.push_back(i);
        const Poly qj = detail::cm_poly(zd, pts, nv, 1);
        const Poly qjp = detail::cm_poly(zdp, pts, nv, 4);
        sys.equations.push_back(qjp - alpha * qj);
    }
    const std::vector<int> all{0, 1, 2, 3, 4};
    sys.equations.push_back(detail::cm_poly(zd, all, nv, 1));   // five points of a star are flat in R^3
    sys.equations.push_back(detail::cm_poly(zdp, all, nv, 4));
    return sys;
}

namespace detail {

/// Triangle-inequality enclosure for one free squared diagonal, from the
/// two-edge paths through the intermediates that have known distances to
/// both ends.
inline Interval diagonal_bounds(const PatchDistances& zd, int a, int b)
{
    double lo = 0.0, hi = -1.0;
    for (int k = 0; k < zd.points; ++k) {
        if (k == a || k == b) continue;
        if (!zd.known(a, k) || !zd.known(k, b)) continue;
        const Interval da = sqrt_nonneg(zd.get(a, k));
        const Interval db = sqrt_nonneg(zd.get(k, b));
        hi = (hi < 0.0) ? (da.hi + db.hi) : std::min(hi, da.hi + db.hi);
        lo = std::max(lo, std::max(da.lo - db.hi, db.lo - da.hi));
    }
    if (hi < 0.0) raise(Errc::Internal, "free diagonal has no flanking path");
    lo = std::max(0.0, lo);
    return {std::max(0.0, down(lo * lo)), up(up(hi) * up(hi))};
}

}  // namespace detail

/// Search box for a patch system: ratio variable in [1/bound, bound], each
/// squared diagonal bounded by triangle inequalities along its flanks.
inline IntervalBox patch_feasible_box(const PatchDistances& zd, const PatchDistances& zdp,
                                      const SolverConfig& cfg)
{
    IntervalBox box;
    box.v.push_back({1.0 / cfg.alpha_bound, cfg.alpha_bound});
    auto add_side = [&](const PatchDistances& d) {
        box.v.push_back(detail::diagonal_bounds(d, 1, 3));
        box.v.push_back(detail::diagonal_bounds(d, 2, 4));
        if (d.vclass == ValencyClass::N5plus) box.v.push_back(detail::diagonal_bounds(d, 1, 4));
    };
    add_side(zd);
    add_side(zdp);
    return box;
}

}  // namespace affdev
