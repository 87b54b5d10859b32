#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "affdev/correspondence.hpp"
#include "affdev/development.hpp"
#include "affdev/patch.hpp"
#include "affdev/simplepath.hpp"
#include "affdev/solver.hpp"
#include "affdev/verdict.hpp"

namespace affdev {

struct RecognizeConfig {
    SolverConfig solver;
    double eps_aff = 1e-9;
    bool symmetric = false;  // also intersect reciprocal ratio sets of the second development
    bool fast_path = true;
    int jobs = 1;
};

struct PatchEvidence {
    std::string vertex;
    int window = 0;
    char side = 'A';
    ValencyClass vclass = ValencyClass::N3;
    AlphaSet alpha;
    std::string status;  // Certified | Incomplete | Skipped
    std::string note;
    double residual = 0.0;
    double ms = 0.0;
};

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    AlphaSet alpha_intersection;
    bool certified = false;
    std::vector<PatchEvidence> patches;
    std::string fast_path;             // "", "simple", or "gamma"
    std::string face_screen_witness;   // failing face pair, when stage 1 decides
    double total_ms = 0.0;
};

namespace detail {

/// Runs jobs with a small pool; each job writes only its own slot, so the
/// result is independent of scheduling.
inline void run_indexed(int jobs, int count, const std::function<void(int)>& fn)
{
    jobs = std::max(1, jobs);
    if (jobs == 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    const int workers = std::min(jobs, count);
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

inline Patch map_patch(const Patch& z, const CombinatorialMap& map)
{
    Patch img = z;
    img.center = map.vertex_image(z.center);
    for (std::size_t i = 0; i < z.faces.size(); ++i)
        img.faces[i] = map.face_image(z.faces[i]);
    for (auto& r : img.rim) r = map.vertex_image(r);
    return img;
}

inline AlphaSet reciprocal(const AlphaSet& s)
{
    AlphaSet r;
    r.certified = s.certified;
    for (auto it = s.intervals.rbegin(); it != s.intervals.rend(); ++it) {
        if (it->hi <= 0.0) continue;  // ratios are positive by construction
        r.intervals.push_back(divide(Interval(1.0), *it));
    }
    return r;
}

struct PatchJob {
    Patch patch;
    char side = 'A';
};

inline PatchEvidence evaluate_patch(const Development& deva, const Development& devb,
                                    const CombinatorialMap& map, const PatchJob& job,
                                    const SolverConfig& cfg,
                                    const Interval* alpha_window = nullptr)
{
    const auto t0 = std::chrono::steady_clock::now();
    PatchEvidence ev;
    ev.vertex = deva.vertex(job.patch.center).id;
    ev.window = job.patch.window;
    ev.side = job.side;
    ev.vclass = job.patch.vclass;
    auto finish = [&](PatchEvidence e) {
        e.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                   .count();
        return e;
    };

    if (job.patch.degenerate) {
        ev.status = "Skipped";
        ev.note = "patch rim repeats a vertex";
        ev.alpha = alpha_set_full(cfg);
        return finish(ev);
    }

    PatchDistances zd, zdp;
    try {
        zd = patch_distances(deva, job.patch);
        zdp = patch_distances(devb, map_patch(job.patch, map));
    } catch (const Error& err) {
        ev.status = "Skipped";
        ev.note = err.what();
        ev.alpha = alpha_set_full(cfg);
        return finish(ev);
    }

    if (job.patch.vclass == ValencyClass::N3) {
        const auto [qa, qb] = patch_scalar_n3_interval(zd, zdp);
        if (qa.hi <= 0.0 || qb.hi <= 0.0) {
            // Lemma-1 style certificate: such a star pair cannot come from
            // polyhedra with nondegenerate vertex stars.
            ev.status = "Certified";
            ev.note = "unrealizable valency-3 star";
            ev.alpha = AlphaSet{{}, true};
        } else if (qa.lo > 0.0 && qb.lo > 0.0) {
            Interval a = divide(qb, qa);
            a.lo -= cfg.eps_res * std::fabs(a.lo);
            a.hi += cfg.eps_res * std::fabs(a.hi);
            a = intersect(a, {1.0 / cfg.alpha_bound, cfg.alpha_bound});
            ev.status = "Certified";
            ev.alpha.certified = true;
            if (!a.empty_as_set()) ev.alpha.intervals = {a};
        } else {
            ev.status = "Incomplete";
            ev.note = "determinant sign not resolved";
            ev.alpha = alpha_set_full(cfg);
        }
        return finish(ev);
    }

    const PolySystem sys = (job.patch.vclass == ValencyClass::N4) ? patch_system_n4(zd, zdp)
                                                                  : patch_system_n5(zd, zdp);
    IntervalBox box = patch_feasible_box(zd, zdp, cfg);
    if (alpha_window) {
        // The final verdict intersects over all patches anyway, so the
        // solver may restrict its ratio search to the window already pinned
        // by the certified valency-3 sets; that cuts off the degenerate
        // large-ratio funnels these systems carry.
        box.v[0] = intersect(box.v[0], *alpha_window);
        if (box.v[0].empty_as_set()) {
            ev.status = "Certified";
            ev.note = "ratio window already empty";
            ev.alpha = AlphaSet{{}, true};
            return finish(ev);
        }
    }
    const SolveResult res = solve_positive(sys, box, cfg);
    ev.alpha = project_alpha(res, cfg);
    ev.status = ev.alpha.certified ? "Certified" : "Incomplete";
    for (const auto& c : res.clusters) ev.residual = std::max(ev.residual, c.residual);
    return finish(ev);
}

}  // namespace detail

/// Item-by-item examination of all vertices and patches: face screen first,
/// then the simple/path fast exit, then per-patch ratio sets intersected
/// over everything. Deterministic for fixed config, including across job
/// counts.
inline Verdict recognize(const Development& deva, const Development& devb,
                         const CombinatorialMap& map, const RecognizeConfig& cfg = {})
{
    const auto t0 = std::chrono::steady_clock::now();
    Verdict out;
    auto finish = [&](Verdict v) {
        v.total_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        return v;
    };

    // Stage 1: affine equivalence of polyhedra forces face-wise affine
    // equivalence, so one failing pair is an unconditional negative.
    if (auto bad = face_screen(deva, devb, map, cfg.eps_aff)) {
        out.kind = VerdictKind::NotAffineEquivalent;
        out.certified = true;
        out.alpha_intersection = AlphaSet{{}, true};
        out.face_screen_witness = "face '" + deva.face(*bad).id + "' vs '"
                                  + devb.face(map.face_image(*bad)).id + "'";
        return finish(out);
    }

    // Stage 2: simple developments and covering valency-3 paths settle the
    // question without any solving, conditional on strict convexity.
    if (cfg.fast_path && deva.closed()) {
        if (is_simple_development(deva)) {
            out.kind = VerdictKind::AffineEquivalentConditional;
            out.fast_path = "simple";
            out.alpha_intersection = alpha_set_full(cfg.solver);
            return finish(out);
        }
        if (find_gamma_path(deva)) {
            out.kind = VerdictKind::AffineEquivalentConditional;
            out.fast_path = "gamma";
            out.alpha_intersection = alpha_set_full(cfg.solver);
            return finish(out);
        }
    }

    // Stage 3: enumerate patches, deterministically ordered by
    // (side, vertex id, window). Valency-3 patches run first: they are
    // cheap, certified, and their running intersection narrows the ratio
    // window the solver-backed patches search.
    std::vector<detail::PatchJob> n3_jobs, solver_jobs;
    auto gather = [&](const Development& dev, char side) {
        std::vector<int> order(static_cast<std::size_t>(dev.vertex_count()));
        for (int v = 0; v < dev.vertex_count(); ++v) order[std::size_t(v)] = v;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return dev.vertex(a).id < dev.vertex(b).id; });
        for (int v : order) {
            if (static_cast<int>(dev.star(v).faces.size()) < 3) continue;  // no patch exists
            try {
                for (Patch& z : enumerate_patches(dev, v)) {
                    auto& dst = (z.vclass == ValencyClass::N3) ? n3_jobs : solver_jobs;
                    dst.push_back({std::move(z), side});
                }
            } catch (const Error&) {
                continue;  // malformed star: nothing to examine here
            }
        }
    };
    gather(deva, 'A');
    CombinatorialMap inv;
    if (cfg.symmetric) {
        inv = map.inverse(deva, devb);
        gather(devb, 'B');
    }

    std::vector<AlphaSet> sets;
    std::vector<PatchEvidence> evidence;
    AlphaSet window = alpha_set_full(cfg.solver);
    window.certified = true;
    for (const auto& job : n3_jobs) {
        PatchEvidence ev = (job.side == 'A')
                               ? detail::evaluate_patch(deva, devb, map, job, cfg.solver)
                               : detail::evaluate_patch(devb, deva, inv, job, cfg.solver);
        if (ev.status != "Skipped") {
            const AlphaSet s = job.side == 'A' ? ev.alpha : detail::reciprocal(ev.alpha);
            sets.push_back(s);
            const AlphaSet pair[2] = {window, s};
            window = intersect_alpha_sets(pair);
        }
        evidence.push_back(std::move(ev));
    }

    if (!sets.empty() && window.empty()) {
        // Certified valency-3 ratios are already incompatible.
        out.patches = std::move(evidence);
        out.kind = VerdictKind::NotAffineEquivalent;
        out.certified = true;
        out.alpha_intersection = AlphaSet{{}, true};
        return finish(out);
    }

    Interval hull{1.0 / cfg.solver.alpha_bound, cfg.solver.alpha_bound};
    if (!window.intervals.empty())
        hull = {window.intervals.front().lo, window.intervals.back().hi};
    const Interval hull_b = divide(Interval(1.0), hull);  // side B searches 1/alpha

    // Without a narrowed ratio window these systems carry degenerate
    // funnels no bisection budget resolves; spend little on them.
    SolverConfig scfg = cfg.solver;
    if (hull.hi / std::max(hull.lo, 1e-300) > 1e3)
        scfg.node_budget = std::min(scfg.node_budget, 2500L);

    const std::size_t base = evidence.size();
    evidence.resize(base + solver_jobs.size());
    detail::run_indexed(cfg.jobs, static_cast<int>(solver_jobs.size()), [&](int i) {
        const detail::PatchJob& job = solver_jobs[std::size_t(i)];
        evidence[base + std::size_t(i)] =
            (job.side == 'A') ? detail::evaluate_patch(deva, devb, map, job, scfg, &hull)
                              : detail::evaluate_patch(devb, deva, inv, job, scfg, &hull_b);
    });
    for (std::size_t i = base; i < evidence.size(); ++i) {
        const auto& ev = evidence[i];
        if (ev.status == "Skipped") continue;
        sets.push_back(ev.side == 'A' ? ev.alpha : detail::reciprocal(ev.alpha));
    }
    out.patches = std::move(evidence);

    if (sets.empty()) {
        out.kind = VerdictKind::Inconclusive;
        out.alpha_intersection = alpha_set_full(cfg.solver);
        return finish(out);
    }
    out.alpha_intersection = intersect_alpha_sets(sets);
    if (out.alpha_intersection.empty()) {
        // Incomplete sets cover the whole ratio range, so emptiness is
        // forced by certified sets alone.
        out.kind = VerdictKind::NotAffineEquivalent;
        out.certified = true;
        out.alpha_intersection.certified = true;
    } else {
        out.kind = VerdictKind::Inconclusive;
        out.certified = out.alpha_intersection.certified;
    }
    return finish(out);
}

// --- reporting -------------------------------------------------------------

inline nlohmann::ordered_json report_json(const Verdict& v, bool include_timings = true)
{
    nlohmann::ordered_json j;
    j["verdict"] = to_string(v.kind);
    auto ivals = [](const AlphaSet& s) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (const Interval& x : s.intervals) a.push_back({x.lo, x.hi});
        return a;
    };
    j["alphaIntersection"] = ivals(v.alpha_intersection);
    j["certified"] = v.certified;
    if (!v.face_screen_witness.empty()) j["faceScreen"] = v.face_screen_witness;
    if (!v.fast_path.empty()) {
        j["fastPath"] = v.fast_path;
        j["hypothesis"] =
            "conditional on both polyhedra being strictly convex and closed, "
            "which developments alone cannot certify";
    }
    auto& jp = j["patches"] = nlohmann::ordered_json::array();
    for (const auto& ev : v.patches) {
        nlohmann::ordered_json e;
        e["vertex"] = ev.vertex;
        e["window"] = ev.window;
        e["side"] = std::string(1, ev.side);
        e["valencyClass"] = to_string(ev.vclass);
        e["alphaSet"] = ivals(ev.alpha);
        e["status"] = ev.status;
        if (!ev.note.empty()) e["note"] = ev.note;
        e["residual"] = ev.residual;
        if (include_timings) e["ms"] = ev.ms;
        jp.push_back(std::move(e));
    }
    j["timings"]["totalMs"] = include_timings ? v.total_ms : 0.0;
    return j;
}

inline std::string report_text(const Verdict& v)
{
    std::string s;
    s += "verdict: ";
    s += to_string(v.kind);
    s += v.certified ? " (certified)\n" : "\n";
    if (!v.face_screen_witness.empty())
        s += "  face screen failed: " + v.face_screen_witness + "\n";
    if (!v.fast_path.empty())
        s += "  fast path: " + v.fast_path
             + " (conditional on both polyhedra being strictly convex and closed, which "
               "developments alone cannot certify)\n";
    s += "  ratio intersection:";
    if (v.alpha_intersection.intervals.empty()) s += " empty";
    for (const Interval& x : v.alpha_intersection.intervals)
        s += " [" + std::to_string(x.lo) + ", " + std::to_string(x.hi) + "]";
    s += "\n";
    int certified = 0, incomplete = 0, skipped = 0;
    for (const auto& ev : v.patches) {
        if (ev.status == "Certified") ++certified;
        if (ev.status == "Incomplete") ++incomplete;
        if (ev.status == "Skipped") ++skipped;
    }
    s += "  patches: " + std::to_string(v.patches.size()) + " (" + std::to_string(certified)
         + " certified, " + std::to_string(incomplete) + " incomplete, " + std::to_string(skipped)
         + " skipped)\n";
    return s;
}

}  // namespace affdev
