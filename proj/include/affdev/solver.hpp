#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "affdev/errors.hpp"
#include "affdev/geometry.hpp"
#include "affdev/interval.hpp"
#include "affdev/polynomial.hpp"

namespace affdev {

/// System of real polynomial equations (each equation meaning "= 0") over
/// named nonnegative variables, one of which is the volume-ratio variable.
struct PolySystem {
    std::vector<std::string> vars;
    int alpha_index = 0;
    std::vector<Poly> equations;

    int nvars() const { return static_cast<int>(vars.size()); }
};

struct IntervalBox {
    std::vector<Interval> v;

    int size() const { return static_cast<int>(v.size()); }
};

struct SolverConfig {
    int max_depth = 40;        // per-variable bisection cap along one path
    double eps_res = 1e-8;     // relative residual accepted as "a solution"
    double eps_width = 1e-6;   // leaf width, relative to the initial box
    double alpha_bound = 1e6;  // ratio variable searched in [1/bound, bound]
    long node_budget = 16000;  // boxes examined before giving up
    int verify_cap = 2048;     // max leaves we are willing to refine
};

enum class SolveStatus { CertifiedEmpty, Clusters, Inconclusive };

inline const char* to_string(SolveStatus s)
{
    switch (s) {
    case SolveStatus::CertifiedEmpty: return "CertifiedEmpty";
    case SolveStatus::Clusters: return "Clusters";
    case SolveStatus::Inconclusive: return "Inconclusive";
    }
    return "?";
}

struct SolveCluster {
    Interval alpha;               // projection of the cluster onto the ratio variable
    IntervalBox hull;             // hull of the merged leaf boxes
    std::vector<double> refined;  // damped least-squares refinement of a member
    double residual = 0.0;        // max relative residual among member refinements
};

struct SolveResult {
    SolveStatus status = SolveStatus::Inconclusive;
    std::vector<SolveCluster> clusters;
    long boundary_leaves = 0;  // leaves hugging a coordinate plane; reported, non-blocking
    long nodes = 0;
    bool budget_exhausted = false;
    IntervalBox search_box;
    int alpha_index = 0;
};

namespace detail {

struct BpBox {
    std::vector<Interval> v;
    std::array<std::uint8_t, kMaxVars> splits{};
};

/// Flattened polynomial for the hot loop: evaluation against a per-box
/// table of variable powers.
struct FlatPoly {
    struct Term {
        Interval c;
        std::array<std::uint8_t, kMaxVars> e;
    };
    std::vector<Term> terms;
    int max_deg[kMaxVars] = {};

    static FlatPoly from(const Poly& p)
    {
        FlatPoly f;
        for (const auto& t : p.terms()) {
            f.terms.push_back({t.c, t.e});
            for (int v = 0; v < kMaxVars; ++v)
                f.max_deg[v] = std::max(f.max_deg[v], int(t.e[std::size_t(v)]));
        }
        return f;
    }

    /// pow[v * stride + e] must hold the enclosure of x_v^e.
    Interval eval(const Interval* pow, int stride) const
    {
        Interval acc(0.0);
        for (const auto& t : terms) {
            Interval m = t.c;
            for (int v = 0; v < kMaxVars; ++v) {
                const int e = t.e[std::size_t(v)];
                if (e) m *= pow[v * stride + e];
            }
            acc += m;
        }
        return acc;
    }
};

/// Per-solve compilation: equations, their gradients, and the linear
/// decompositions f = A * x_i + B for every (equation, variable) pair where
/// the variable appears linearly; those feed a hull-consistency contractor.
struct CompiledSystem {
    int n = 0;
    int max_deg = 0;
    std::vector<FlatPoly> eqs;
    std::vector<FlatPoly> jac;  // m x n, row-major
    struct Slice {
        int var;
        FlatPoly a, b;
    };
    std::vector<Slice> slices;

    static CompiledSystem compile(const PolySystem& sys)
    {
        CompiledSystem cs;
        cs.n = sys.nvars();
        for (const auto& eq : sys.equations) {
            cs.eqs.push_back(FlatPoly::from(eq));
            for (int i = 0; i < cs.n; ++i) cs.jac.push_back(FlatPoly::from(eq.derivative(i)));
        }
        for (const auto& f : cs.eqs)
            for (int v = 0; v < kMaxVars; ++v) cs.max_deg = std::max(cs.max_deg, f.max_deg[v]);
        for (const auto& eq : sys.equations) {
            for (int i = 0; i < cs.n; ++i) {
                if (eq.degree(i) != 1) continue;
                Poly a(cs.n), b(cs.n);
                for (const auto& t : eq.terms()) {
                    Poly term = Poly::constant(cs.n, t.c);
                    auto e = t.e;
                    const bool with_x = e[std::size_t(i)] == 1;
                    e[std::size_t(i)] = 0;
                    for (int v2 = 0; v2 < cs.n; ++v2)
                        for (int k = 0; k < e[std::size_t(v2)]; ++k)
                            term = term * Poly::variable(cs.n, v2);
                    if (with_x)
                        a = a + term;
                    else
                        b = b + term;
                }
                cs.slices.push_back({i, FlatPoly::from(a), FlatPoly::from(b)});
            }
        }
        return cs;
    }
};

struct PowTable {
    int stride = 0;
    std::vector<Interval> pow;

    void fill(const std::vector<Interval>& box, int max_deg)
    {
        stride = max_deg + 1;
        pow.assign(static_cast<std::size_t>(kMaxVars * stride), Interval(1.0));
        for (std::size_t v = 0; v < box.size(); ++v) {
            for (int e = 1; e <= max_deg; ++e)
                pow[v * std::size_t(stride) + std::size_t(e)] =
                    (e == 1)   ? box[v]
                    : (e == 2) ? square(box[v])
                               : pow[v * std::size_t(stride) + std::size_t(e - 1)] * box[v];
        }
    }
};

/// One Krawczyk step on the square subsystem built from the first n
/// equations: K = m - Y F(m) + (I - Y J(box)) (box - m) with Y an
/// approximate midpoint-Jacobian inverse. Every operation is an enclosure,
/// so the three possible outcomes are all proofs:
///   Empty     - K misses the box entirely: no solution here;
///   Unique    - K lands strictly inside: exactly one root, box shrunk to K;
///   Contracted- box replaced by box intersect K (possibly unchanged).
/// Coordinates already at leaf width (eps_abs) are exempt from the strict
/// inclusion test; for them "inside" carries no extra information and the
/// outcome only steers whether splitting stops.
enum class KrawczykOutcome { Empty, Unique, Contracted, Skipped };

inline KrawczykOutcome krawczyk_step(const CompiledSystem& cs, std::vector<Interval>& box,
                                     const std::vector<Interval>& jbox,
                                     const std::vector<Interval>& fm,
                                     const std::vector<double>& eps_abs)
{
    const int n = cs.n;
    if (static_cast<int>(cs.eqs.size()) < n) return KrawczykOutcome::Skipped;

    // approximate inverse of the midpoint Jacobian
    std::vector<double> jm(static_cast<std::size_t>(n * n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            jm[std::size_t(j * n + i)] = jbox[std::size_t(j * cs.n + i)].mid();
    std::vector<double> y(static_cast<std::size_t>(n * n), 0.0);
    for (int i = 0; i < n; ++i) y[std::size_t(i * n + i)] = 1.0;
    if (!solve_dense(jm, y, n, n)) return KrawczykOutcome::Skipped;

    bool unique = true;
    std::vector<Interval> knew(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Interval acc(box[std::size_t(i)].mid());
        for (int j = 0; j < n; ++j)
            acc -= Interval(y[std::size_t(i * n + j)]) * fm[std::size_t(j)];
        knew[std::size_t(i)] = acc;
    }
    for (int i = 0; i < n; ++i) {
        Interval acc = knew[std::size_t(i)];
        for (int k = 0; k < n; ++k) {
            Interval rik = (i == k) ? Interval(1.0) : Interval(0.0);
            for (int j = 0; j < n; ++j)
                rik -= Interval(y[std::size_t(i * n + j)]) * jbox[std::size_t(j * cs.n + k)];
            acc += rik * (box[std::size_t(k)] - Interval(box[std::size_t(k)].mid()));
        }
        knew[std::size_t(i)] = acc;
    }

    for (int i = 0; i < n; ++i) {
        const Interval cut = intersect(knew[std::size_t(i)], box[std::size_t(i)]);
        if (cut.empty_as_set()) return KrawczykOutcome::Empty;
        const bool at_leaf_width = box[std::size_t(i)].width() <= eps_abs[std::size_t(i)];
        if (!at_leaf_width
            && !(knew[std::size_t(i)].lo > box[std::size_t(i)].lo
                 && knew[std::size_t(i)].hi < box[std::size_t(i)].hi))
            unique = false;
    }
    for (int i = 0; i < n; ++i)
        box[std::size_t(i)] = intersect(knew[std::size_t(i)], box[std::size_t(i)]);
    return unique ? KrawczykOutcome::Unique : KrawczykOutcome::Contracted;
}

/// Returns false when contraction proves the box empty.
inline bool contract(const CompiledSystem& cs, std::vector<Interval>& box, PowTable& tab)
{
    if (cs.slices.empty()) return true;
    for (int round = 0; round < 2; ++round) {
        bool changed = false;
        // Powers refresh once per round; evaluating later slices against the
        // pre-contraction table only widens enclosures, so this stays sound.
        tab.fill(box, cs.max_deg);
        for (const auto& s : cs.slices) {
            const Interval a = s.a.eval(tab.pow.data(), tab.stride);
            if (a.contains_zero()) continue;
            const Interval cand = divide(-s.b.eval(tab.pow.data(), tab.stride), a);
            const Interval cut = intersect(box[std::size_t(s.var)], cand);
            if (cut.empty_as_set()) return false;
            if (cut.lo > box[std::size_t(s.var)].lo || cut.hi < box[std::size_t(s.var)].hi) {
                box[std::size_t(s.var)] = cut;
                changed = true;
            }
        }
        if (!changed) break;
    }
    return true;
}

/// Damped Gauss-Newton step refinement toward F(x) = 0 inside a box.
/// Returns the final max relative residual.
inline double refine_point(const PolySystem& sys, const IntervalBox& search,
                           std::vector<double>& x, int max_iter = 60)
{
    const int n = sys.nvars();
    const int m = static_cast<int>(sys.equations.size());
    std::vector<Poly> jac;
    jac.reserve(std::size_t(m * n));
    for (const auto& eq : sys.equations)
        for (int j = 0; j < n; ++j) jac.push_back(eq.derivative(j));

    auto clamp = [&](std::vector<double>& p) {
        for (int i = 0; i < n; ++i) {
            const Interval b = search.v[std::size_t(i)];
            const double floor = b.lo + 1e-14 * (b.hi - b.lo);
            p[std::size_t(i)] = std::min(std::max(p[std::size_t(i)], floor), b.hi);
        }
    };
    clamp(x);

    auto residual_at = [&](const std::vector<double>& p) {
        double r = 0.0;
        for (const auto& eq : sys.equations) {
            const double f = eq.eval_mid(p);
            const double s = std::max(eq.eval_abs(p), 1e-300);
            r = std::max(r, std::fabs(f) / s);
        }
        return r;
    };

    double res = residual_at(x);
    double lambda = 1e-8;
    for (int iter = 0; iter < max_iter && res > 1e-15; ++iter) {
        std::vector<double> f(static_cast<std::size_t>(m)), scale(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            f[std::size_t(i)] = sys.equations[std::size_t(i)].eval_mid(x);
            scale[std::size_t(i)] = std::max(sys.equations[std::size_t(i)].eval_abs(x), 1e-300);
        }
        // scaled normal equations: (J^T J + lambda diag) dx = -J^T f
        std::vector<double> jtj(static_cast<std::size_t>(n * n), 0.0), jtf(std::size_t(n), 0.0);
        for (int i = 0; i < m; ++i) {
            std::vector<double> row(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j)
                row[std::size_t(j)] = jac[std::size_t(i * n + j)].eval_mid(x) / scale[std::size_t(i)];
            const double fi = f[std::size_t(i)] / scale[std::size_t(i)];
            for (int a = 0; a < n; ++a) {
                jtf[std::size_t(a)] += row[std::size_t(a)] * fi;
                for (int b = 0; b < n; ++b)
                    jtj[std::size_t(a * n + b)] += row[std::size_t(a)] * row[std::size_t(b)];
            }
        }
        bool improved = false;
        for (int attempt = 0; attempt < 8 && !improved; ++attempt) {
            std::vector<double> lhs = jtj;
            double diag_max = 0.0;
            for (int a = 0; a < n; ++a) diag_max = std::max(diag_max, lhs[std::size_t(a * n + a)]);
            const double damp = lambda * std::max(diag_max, 1e-30);
            for (int a = 0; a < n; ++a) lhs[std::size_t(a * n + a)] += damp;
            std::vector<double> dx(static_cast<std::size_t>(n));
            for (int a = 0; a < n; ++a) dx[std::size_t(a)] = -jtf[std::size_t(a)];
            if (!solve_dense(lhs, dx, n, 1)) {
                lambda *= 10.0;
                continue;
            }
            std::vector<double> cand = x;
            for (int a = 0; a < n; ++a) cand[std::size_t(a)] += dx[std::size_t(a)];
            clamp(cand);
            const double cres = residual_at(cand);
            if (cres < res) {
                x = cand;
                res = cres;
                lambda = std::max(lambda * 0.25, 1e-12);
                improved = true;
            } else {
                lambda *= 10.0;
            }
        }
        if (!improved) break;
    }
    return res;
}

}  // namespace detail

/// Interval branch-and-prune over the given box. A sub-box is discarded only
/// when some equation's conservative enclosure excludes zero, so the
/// undiscarded region always contains every true solution; CertifiedEmpty is
/// therefore a proof of emptiness of the (open) positive orthant part of the
/// box. Deterministic: exploration order, splits, and arithmetic do not
/// depend on scheduling.
inline SolveResult solve_positive(const PolySystem& sys, const IntervalBox& box,
                                  const SolverConfig& cfg)
{
    const int n = sys.nvars();
    SolveResult out;
    out.search_box = box;
    out.alpha_index = sys.alpha_index;

    std::vector<double> width0(static_cast<std::size_t>(n)), eps_abs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        width0[std::size_t(i)] = box.v[std::size_t(i)].width();
        // relative to the initial width, with an absolute floor so that a
        // hair-thin initial window does not demand absurd precision
        eps_abs[std::size_t(i)] =
            cfg.eps_width * std::max(width0[std::size_t(i)], box.v[std::size_t(i)].mag());
    }
    const detail::CompiledSystem cs = detail::CompiledSystem::compile(sys);
    const int m = static_cast<int>(cs.eqs.size());
    const int depth_cap = std::min(cfg.max_depth, 250);

    std::vector<detail::BpBox> stack;
    stack.push_back({box.v, {}});
    std::vector<detail::BpBox> leaves;
    detail::PowTable tab, midtab;
    std::vector<Interval> mids(static_cast<std::size_t>(n));
    std::vector<double> smear(static_cast<std::size_t>(n), 0.0);

    while (!stack.empty()) {
        if (out.nodes >= cfg.node_budget) {
            out.budget_exhausted = true;
            break;
        }
        detail::BpBox cur = std::move(stack.back());
        stack.pop_back();
        ++out.nodes;

        // cheap first pass: monomial-sum enclosures
        tab.fill(cur.v, cs.max_deg);
        bool pruned = false;
        for (int j = 0; j < m && !pruned; ++j)
            pruned = !cs.eqs[std::size_t(j)].eval(tab.pow.data(), tab.stride).contains_zero();
        if (pruned) continue;

        if (!detail::contract(cs, cur.v, tab)) continue;

        // Survivors pay for the sharper machinery: mean-value forms (far
        // less interval dependency once boxes shrink), the smear split
        // heuristic, and a Krawczyk step, all sharing one Jacobian
        // evaluation.
        for (int i = 0; i < n; ++i) {
            mids[std::size_t(i)] = Interval(cur.v[std::size_t(i)].mid());
            smear[std::size_t(i)] = 0.0;
        }
        tab.fill(cur.v, cs.max_deg);
        midtab.fill(mids, cs.max_deg);
        std::vector<Interval> jbox(static_cast<std::size_t>(m * n));
        std::vector<Interval> fm(static_cast<std::size_t>(m));
        for (int j = 0; j < m && !pruned; ++j) {
            Interval enc = cs.eqs[std::size_t(j)].eval(tab.pow.data(), tab.stride);
            if (!enc.contains_zero()) {
                pruned = true;
                break;
            }
            fm[std::size_t(j)] = cs.eqs[std::size_t(j)].eval(midtab.pow.data(), midtab.stride);
            Interval centered = fm[std::size_t(j)];
            for (int i = 0; i < n; ++i) {
                const Interval ji =
                    cs.jac[std::size_t(j * n + i)].eval(tab.pow.data(), tab.stride);
                jbox[std::size_t(j * n + i)] = ji;
                centered += ji * (cur.v[std::size_t(i)] - mids[std::size_t(i)]);
                smear[std::size_t(i)] =
                    std::max(smear[std::size_t(i)], ji.mag() * cur.v[std::size_t(i)].width());
            }
            if (!intersect(enc, centered).contains_zero()) pruned = true;
        }
        if (pruned) continue;

        // Interval-Newton acceleration: near a regular root the Krawczyk
        // image contracts quadratically, which collapses the cluster of
        // undiscardable sub-boxes every bisection scheme otherwise produces
        // around a zero.
        switch (detail::krawczyk_step(cs, cur.v, jbox, fm, eps_abs)) {
        case detail::KrawczykOutcome::Empty: continue;
        case detail::KrawczykOutcome::Unique:
            leaves.push_back(std::move(cur));
            continue;
        case detail::KrawczykOutcome::Contracted:
        case detail::KrawczykOutcome::Skipped: break;
        }

        // Split the splittable variable with the largest smear.
        int split = -1;
        double best = -1.0;
        for (int i = 0; i < n; ++i) {
            if (width0[std::size_t(i)] == 0.0) continue;
            if (cur.splits[std::size_t(i)] >= depth_cap) continue;
            const double w = cur.v[std::size_t(i)].width();
            if (w <= eps_abs[std::size_t(i)]) continue;
            if (smear[std::size_t(i)] > best) {
                best = smear[std::size_t(i)];
                split = i;
            }
        }
        if (split < 0) {
            leaves.push_back(std::move(cur));
            continue;
        }
        const Interval iv = cur.v[std::size_t(split)];
        const double mid = iv.mid();
        detail::BpBox hiBox = cur;
        hiBox.v[std::size_t(split)] = {mid, iv.hi};
        hiBox.splits[std::size_t(split)]++;
        cur.v[std::size_t(split)] = {iv.lo, mid};
        cur.splits[std::size_t(split)]++;
        stack.push_back(std::move(hiBox));
        stack.push_back(std::move(cur));
    }

    if (out.budget_exhausted) {
        out.status = SolveStatus::Inconclusive;
        return out;
    }

    // Leaves hugging {x_i = 0} can only carry non-strictly-positive
    // solutions; they are reported but do not block emptiness of the open
    // orthant.
    std::vector<detail::BpBox> inner;
    for (auto& lf : leaves) {
        bool boundary = false;
        for (int i = 0; i < n; ++i)
            if (width0[std::size_t(i)] > 0.0 && lf.v[std::size_t(i)].hi <= eps_abs[std::size_t(i)]) {
                boundary = true;
                break;
            }
        if (boundary)
            ++out.boundary_leaves;
        else
            inner.push_back(std::move(lf));
    }

    if (inner.empty()) {
        out.status = SolveStatus::CertifiedEmpty;
        return out;
    }
    if (static_cast<int>(inner.size()) > cfg.verify_cap) {
        out.status = SolveStatus::Inconclusive;
        return out;
    }

    struct Verified {
        Interval alpha;
        std::vector<Interval> hull;
        std::vector<double> refined;
        double residual;
    };
    std::vector<Verified> ok;
    ok.reserve(inner.size());
    for (const auto& lf : inner) {
        std::vector<double> x(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) x[std::size_t(i)] = lf.v[std::size_t(i)].mid();
        const double res = detail::refine_point(sys, out.search_box, x);
        bool positive = true;
        for (int i = 0; i < n; ++i)
            if (width0[std::size_t(i)] > 0.0 && x[std::size_t(i)] <= 0.0) positive = false;
        if (res > cfg.eps_res || !positive) {
            out.status = SolveStatus::Inconclusive;
            return out;
        }
        ok.push_back({lf.v[std::size_t(sys.alpha_index)], lf.v, x, res});
    }

    // Merge by overlap of the ratio-variable projection; downstream only the
    // alpha projection matters.
    std::sort(ok.begin(), ok.end(),
              [](const Verified& a, const Verified& b) { return a.alpha.lo < b.alpha.lo; });
    for (const auto& leaf : ok) {
        if (!out.clusters.empty() && leaf.alpha.lo <= out.clusters.back().alpha.hi) {
            SolveCluster& c = out.clusters.back();
            c.alpha = Interval::hull(c.alpha, leaf.alpha);
            for (int i = 0; i < n; ++i)
                c.hull.v[std::size_t(i)] = Interval::hull(c.hull.v[std::size_t(i)], leaf.hull[std::size_t(i)]);
            if (leaf.residual < c.residual) c.refined = leaf.refined;
            c.residual = std::max(c.residual, leaf.residual);
        } else {
            SolveCluster c;
            c.alpha = leaf.alpha;
            c.hull.v = leaf.hull;
            c.refined = leaf.refined;
            c.residual = leaf.residual;
            out.clusters.push_back(std::move(c));
        }
    }
    out.status = SolveStatus::Clusters;
    return out;
}

// --- alpha sets ----------------------------------------------------------

/// Finite union of closed intervals of candidate ratio values. When
/// certified, the true set of admissible ratios is contained in the union.
struct AlphaSet {
    std::vector<Interval> intervals;  // disjoint, sorted
    bool certified = true;

    bool empty() const { return intervals.empty(); }
};

namespace detail {
inline std::vector<Interval> merge_intervals(std::vector<Interval> xs)
{
    std::sort(xs.begin(), xs.end(), [](Interval a, Interval b) { return a.lo < b.lo; });
    std::vector<Interval> out;
    for (const auto& x : xs) {
        if (x.empty_as_set()) continue;
        if (!out.empty() && x.lo <= out.back().hi)
            out.back().hi = std::max(out.back().hi, x.hi);
        else
            out.push_back(x);
    }
    return out;
}
}  // namespace detail

inline AlphaSet alpha_set_full(const SolverConfig& cfg)
{
    AlphaSet s;
    s.intervals = {Interval(1.0 / cfg.alpha_bound, cfg.alpha_bound)};
    s.certified = false;
    return s;
}

/// Projects a solve outcome onto the ratio variable. Cluster intervals are
/// inflated by eps_res (relative) so that exact singleton semantics degrade
/// gracefully on floating input.
inline AlphaSet project_alpha(const SolveResult& r, const SolverConfig& cfg)
{
    switch (r.status) {
    case SolveStatus::CertifiedEmpty: return AlphaSet{{}, true};
    case SolveStatus::Inconclusive: return alpha_set_full(cfg);
    case SolveStatus::Clusters: break;
    }
    std::vector<Interval> xs;
    xs.reserve(r.clusters.size());
    const Interval range = r.search_box.v[std::size_t(r.alpha_index)];
    for (const auto& c : r.clusters) {
        Interval a{c.alpha.lo - cfg.eps_res * std::fabs(c.alpha.lo),
                   c.alpha.hi + cfg.eps_res * std::fabs(c.alpha.hi)};
        a = intersect(a, range);
        if (!a.empty_as_set()) xs.push_back(a);
    }
    return AlphaSet{detail::merge_intervals(std::move(xs)), true};
}

inline AlphaSet intersect_alpha_sets(std::span<const AlphaSet> sets)
{
    if (sets.empty()) raise(Errc::InvalidParams, "empty alpha-set list");
    AlphaSet acc = sets[0];
    acc.intervals = detail::merge_intervals(acc.intervals);
    for (std::size_t s = 1; s < sets.size(); ++s) {
        std::vector<Interval> next;
        const auto b = detail::merge_intervals(sets[s].intervals);
        std::size_t i = 0, j = 0;
        while (i < acc.intervals.size() && j < b.size()) {
            const Interval x = intersect(acc.intervals[i], b[j]);
            if (!x.empty_as_set()) next.push_back(x);
            if (acc.intervals[i].hi < b[j].hi)
                ++i;
            else
                ++j;
        }
        acc.intervals = std::move(next);
        acc.certified = acc.certified && sets[s].certified;
    }
    return acc;
}

}  // namespace affdev
