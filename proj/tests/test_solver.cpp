#include <catch_amalgamated.hpp>

#include "affdev/embedded.hpp"
#include "affdev/solver.hpp"

using namespace affdev;

namespace {

PolySystem one_var_system(std::vector<Poly> eqs)
{
    PolySystem sys;
    sys.vars = {"x"};
    sys.alpha_index = 0;
    sys.equations = std::move(eqs);
    return sys;
}

/// Random small system with a planted positive solution: equations
/// g_i(x) - g_i(p) for random quadratics g_i.
PolySystem planted_system(Rng& rng, int nvars, std::vector<double>& point)
{
    point.clear();
    for (int i = 0; i < nvars; ++i) point.push_back(rng.uniform(0.2, 3.0));
    PolySystem sys;
    for (int i = 0; i < nvars; ++i) sys.vars.push_back("x" + std::to_string(i));
    sys.alpha_index = 0;
    for (int e = 0; e < nvars; ++e) {
        Poly g(nvars);
        const int terms = 2 + int(rng.next() % 3);
        for (int t = 0; t < terms; ++t) {
            Poly mono = Poly::constant(nvars, Interval(rng.uniform(-2.0, 2.0)));
            for (int rep = 0; rep < 2; ++rep) {
                const int v = int(rng.next() % std::uint64_t(nvars));
                if (rng.uniform() < 0.7) mono = mono * Poly::variable(nvars, v);
            }
            g = g + mono;
        }
        const double at = g.eval_mid(point);
        sys.equations.push_back(g - Poly::constant(nvars, Interval(at)));
    }
    return sys;
}

IntervalBox cube_box(int nvars, double lo, double hi)
{
    IntervalBox b;
    for (int i = 0; i < nvars; ++i) b.v.push_back({lo, hi});
    return b;
}

}  // namespace

TEST_CASE("single-equation examples")
{
    const Poly x = Poly::variable(1, 0);
    SolverConfig cfg;

    SECTION("x^2 - 4 on [0, 10] has one cluster at 2")
    {
        auto sys = one_var_system({x * x - Poly::constant(1, Interval(4.0))});
        const SolveResult r = solve_positive(sys, cube_box(1, 0.0, 10.0), cfg);
        REQUIRE(r.status == SolveStatus::Clusters);
        REQUIRE(r.clusters.size() == 1);
        CHECK(r.clusters[0].alpha.contains(2.0));
        CHECK(r.clusters[0].residual < cfg.eps_res);
    }

    SECTION("x^2 + 1 on [0, 10] is certified empty")
    {
        auto sys = one_var_system({x * x + Poly::constant(1, Interval(1.0))});
        const SolveResult r = solve_positive(sys, cube_box(1, 0.0, 10.0), cfg);
        CHECK(r.status == SolveStatus::CertifiedEmpty);
    }

    SECTION("a root exactly at the boundary is reported but does not block emptiness")
    {
        // x^2 = 0 has only the boundary solution x = 0
        auto sys = one_var_system({x * x});
        const SolveResult r = solve_positive(sys, cube_box(1, 0.0, 1.0), cfg);
        CHECK(r.status == SolveStatus::CertifiedEmpty);
        CHECK(r.boundary_leaves > 0);
    }
}

TEST_CASE("soundness: planted solutions are never certified away")
{
    Rng rng(77);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<double> p;
        const int nvars = 1 + int(rng.next() % 3);
        const PolySystem sys = planted_system(rng, nvars, p);
        SolverConfig cfg;
        cfg.node_budget = 4000;
        const SolveResult r = solve_positive(sys, cube_box(nvars, 0.0, 4.0), cfg);
        CHECK(r.status != SolveStatus::CertifiedEmpty);
        if (r.status == SolveStatus::Clusters) {
            const AlphaSet a = project_alpha(r, cfg);
            bool member = false;
            for (const Interval& iv : a.intervals) member = member || iv.contains(p[0]);
            CHECK(member);  // outer enclosure keeps the planted projection
        }
    }
}

TEST_CASE("constructed infeasible ratio systems are certified empty")
{
    Rng rng(78);
    int verified_count = 0;
    for (int trial = 0; trial < 100; ++trial) {
        // alpha * (x^2 + c1) - 1 = 0 and alpha * (x^2 + c2) - 1 = 0 with
        // c2 > c1 have disjoint attainable ranges for every positive x.
        const double c1 = rng.uniform(0.5, 1.5);
        const double c2 = c1 + rng.uniform(0.5, 1.0);
        PolySystem sys;
        sys.vars = {"alpha", "x"};
        sys.alpha_index = 0;
        const Poly alpha = Poly::variable(2, 0), x = Poly::variable(2, 1);
        sys.equations.push_back(alpha * (x * x + Poly::constant(2, Interval(c1)))
                                - Poly::constant(2, Interval(1.0)));
        sys.equations.push_back(alpha * (x * x + Poly::constant(2, Interval(c2)))
                                - Poly::constant(2, Interval(1.0)));
        SolverConfig cfg;
        IntervalBox box;
        box.v.push_back({1.0 / cfg.alpha_bound, cfg.alpha_bound});
        box.v.push_back({0.0, 10.0});
        const SolveResult r = solve_positive(sys, box, cfg);
        CHECK(r.status == SolveStatus::CertifiedEmpty);
        ++verified_count;
    }
    CHECK(verified_count == 100);
}

TEST_CASE("monotonicity: certified empty is stable under a deeper cap")
{
    Rng rng(79);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<double> p;
        const int nvars = 1 + int(rng.next() % 2);
        PolySystem sys = planted_system(rng, nvars, p);
        // shift so the system usually has no solution in the box
        sys.equations[0] = sys.equations[0] + Poly::constant(nvars, Interval(rng.uniform(0.5, 3.0)));
        SolverConfig shallow, deep;
        shallow.max_depth = 40;
        deep.max_depth = 80;
        shallow.node_budget = deep.node_budget = 4000;
        const auto a = solve_positive(sys, cube_box(nvars, 0.0, 4.0), shallow);
        const auto b = solve_positive(sys, cube_box(nvars, 0.0, 4.0), deep);
        if (a.status == SolveStatus::CertifiedEmpty) CHECK(b.status == SolveStatus::CertifiedEmpty);
    }
}

TEST_CASE("alpha set projection and intersection")
{
    SolverConfig cfg;
    SECTION("projection rules")
    {
        SolveResult empty;
        empty.status = SolveStatus::CertifiedEmpty;
        const AlphaSet ae = project_alpha(empty, cfg);
        CHECK(ae.empty());
        CHECK(ae.certified);

        SolveResult incon;
        incon.status = SolveStatus::Inconclusive;
        const AlphaSet ai = project_alpha(incon, cfg);
        REQUIRE(ai.intervals.size() == 1);
        CHECK(ai.intervals[0].lo == 1.0 / cfg.alpha_bound);
        CHECK(ai.intervals[0].hi == cfg.alpha_bound);
        CHECK(!ai.certified);

        SolveResult clusters;
        clusters.status = SolveStatus::Clusters;
        clusters.alpha_index = 0;
        clusters.search_box.v = {{1.0 / cfg.alpha_bound, cfg.alpha_bound}};
        SolveCluster c;
        c.alpha = {0.99, 1.01};
        clusters.clusters.push_back(c);
        const AlphaSet ac = project_alpha(clusters, cfg);
        REQUIRE(ac.intervals.size() == 1);
        CHECK(ac.intervals[0].lo <= 0.99);
        CHECK(ac.intervals[0].hi >= 1.01);
        CHECK(ac.certified);
    }

    SECTION("intersection algebra")
    {
        auto mk = [](std::vector<Interval> xs, bool cert) {
            AlphaSet s;
            s.intervals = std::move(xs);
            s.certified = cert;
            return s;
        };
        const AlphaSet a = mk({{1, 2}}, true), b = mk({{1.5, 3}}, true), c = mk({{3.5, 4}}, true);
        {
            const AlphaSet ab = intersect_alpha_sets(std::vector<AlphaSet>{a, b});
            REQUIRE(ab.intervals.size() == 1);
            CHECK(ab.intervals[0].lo == 1.5);
            CHECK(ab.intervals[0].hi == 2.0);
            CHECK(ab.certified);
        }
        CHECK(intersect_alpha_sets(std::vector<AlphaSet>{a, c}).empty());
        {
            const AlphaSet incomplete = mk({{0, 10}}, false);
            const AlphaSet mixed = intersect_alpha_sets(std::vector<AlphaSet>{a, incomplete});
            CHECK(!mixed.certified);  // status propagates
        }
        // associativity and commutativity on the interval part
        Rng rng(80);
        for (int trial = 0; trial < 100; ++trial) {
            auto rand_set = [&]() {
                std::vector<Interval> xs;
                const int k = 1 + int(rng.next() % 3);
                for (int i = 0; i < k; ++i) {
                    const double lo = rng.uniform(0, 8);
                    xs.push_back({lo, lo + rng.uniform(0.1, 2.0)});
                }
                AlphaSet s;
                s.intervals = affdev::detail::merge_intervals(std::move(xs));
                return s;
            };
            const AlphaSet x = rand_set(), y = rand_set(), z = rand_set();
            const auto xy_z = intersect_alpha_sets(
                std::vector<AlphaSet>{intersect_alpha_sets(std::vector<AlphaSet>{x, y}), z});
            const auto x_yz = intersect_alpha_sets(
                std::vector<AlphaSet>{x, intersect_alpha_sets(std::vector<AlphaSet>{y, z})});
            const auto yx_z = intersect_alpha_sets(
                std::vector<AlphaSet>{intersect_alpha_sets(std::vector<AlphaSet>{y, x}), z});
            REQUIRE(xy_z.intervals.size() == x_yz.intervals.size());
            REQUIRE(xy_z.intervals.size() == yx_z.intervals.size());
            for (std::size_t i = 0; i < xy_z.intervals.size(); ++i) {
                CHECK(xy_z.intervals[i].lo == x_yz.intervals[i].lo);
                CHECK(xy_z.intervals[i].hi == x_yz.intervals[i].hi);
                CHECK(xy_z.intervals[i].lo == yx_z.intervals[i].lo);
                CHECK(xy_z.intervals[i].hi == yx_z.intervals[i].hi);
            }
        }
    }
}
