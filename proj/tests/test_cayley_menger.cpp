#include <catch_amalgamated.hpp>

#include <algorithm>

#include "affdev/cayley_menger.hpp"
#include "affdev/embedded.hpp"
#include "affdev/rational.hpp"
#include "testutil.hpp"

using namespace affdev;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

template <class S>
DistanceSpec<S> all_equal(int k, S d2)
{
    DistanceSpec<S> spec(k);
    for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) spec.set(i, j, d2);
    return spec;
}

}  // namespace

TEST_CASE("bordered determinant golden values")
{
    SECTION("exact rational")
    {
        CHECK(cayley_menger_det(all_equal<Rational>(2, Rational(1))) == Rational(-3));
        CHECK(cayley_menger_det(all_equal<Rational>(3, Rational(1))) == Rational(4));
        CHECK(simplex_volume_squared(all_equal<Rational>(3, Rational(1))) == Rational(1, 72));
    }
    SECTION("floating")
    {
        CHECK_THAT(cayley_menger_det(all_equal<double>(2, 1.0)), WithinAbs(-3.0, 1e-12));
        CHECK_THAT(cayley_menger_det(all_equal<double>(3, 1.0)), WithinAbs(4.0, 1e-12));
        // unit equilateral triangle area
        CHECK_THAT(simplex_volume(all_equal<double>(2, 1.0)),
                   WithinRel(std::sqrt(3.0) / 4.0, 1e-13));
        // unit regular tetrahedron volume
        CHECK_THAT(simplex_volume(all_equal<double>(3, 1.0)),
                   WithinRel(std::sqrt(2.0) / 12.0, 1e-13));
    }
}

TEST_CASE("degenerate tables")
{
    // collinear triple d = (1, 1, 2)
    DistanceSpec<Rational> spec(2);
    spec.set(0, 1, Rational(1));
    spec.set(0, 2, Rational(4));
    spec.set(1, 2, Rational(1));
    CHECK(cayley_menger_det(spec) == Rational(0));
    CHECK(!realizable_simplex(spec));
    CHECK(simplex_volume(testutil::to_double(spec)) == 0.0);

    // triangle inequality violated: d = (1, 1, 3)
    DistanceSpec<double> bad(2);
    bad.set(0, 1, 1.0);
    bad.set(0, 2, 9.0);
    bad.set(1, 2, 1.0);
    CHECK(!realizable_simplex(bad));
    CHECK_THROWS_AS(simplex_volume(bad), Error);

    // planar square fed as a 3-simplex: degenerate, not realizable
    DistanceSpec<Rational> square(3);
    square.set(0, 1, Rational(1));
    square.set(1, 2, Rational(1));
    square.set(2, 3, Rational(1));
    square.set(0, 3, Rational(1));
    square.set(0, 2, Rational(2));
    square.set(1, 3, Rational(2));
    CHECK(cayley_menger_det(square) == Rational(0));
    CHECK(!realizable_simplex(square));

    // regular tetrahedron exists
    CHECK(realizable_simplex(all_equal<double>(3, 1.0)));
}

TEST_CASE("determinant is invariant under point relabeling")
{
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int k = 2 + int(rng.next() % 2);
        const auto spec = testutil::random_point_spec(rng, k);
        const Rational base = cayley_menger_det(spec);

        std::vector<int> perm(std::size_t(k + 1));
        for (int i = 0; i <= k; ++i) perm[std::size_t(i)] = i;
        for (int i = k; i > 0; --i) std::swap(perm[std::size_t(i)], perm[rng.next() % std::uint64_t(i + 1)]);
        DistanceSpec<Rational> shuffled(k);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j)
                shuffled.d2(i, j) = spec.d2(perm[std::size_t(i)], perm[std::size_t(j)]);
        CHECK(cayley_menger_det(shuffled) == base);
    }
}

TEST_CASE("scaling all distances by lambda multiplies the determinant by lambda^2k")
{
    Rng rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const int k = 2 + int(rng.next() % 3);  // up to the 4-simplex constraint size
        auto spec = testutil::random_point_spec(rng, std::min(k, 3));
        const Rational lambda = testutil::random_rational(rng, 7, 3);
        const Rational l2 = lambda * lambda;
        DistanceSpec<Rational> scaled = spec;
        for (auto& x : scaled.table) x *= l2;
        Rational factor(1);
        for (int i = 0; i < spec.k; ++i) factor *= l2;
        CHECK(cayley_menger_det(scaled) == factor * cayley_menger_det(spec));
    }
    // floating mode within 1e-12 relative
    Rng frng(13);
    for (int trial = 0; trial < 30; ++trial) {
        auto spec = testutil::to_double(testutil::random_point_spec(frng, 3));
        const double lambda = frng.uniform(0.3, 2.5);
        DistanceSpec<double> scaled = spec;
        for (auto& x : scaled.table) x *= lambda * lambda;
        const double want = std::pow(lambda, 6.0) * cayley_menger_det(spec);
        CHECK_THAT(cayley_menger_det(scaled), WithinRel(want, 1e-12));
    }
}

TEST_CASE("volume agrees with the coordinate formula on random rational points")
{
    Rng rng(14);
    int done = 0;
    for (int trial = 0; done < 1000 && trial < 2000; ++trial) {
        const int k = 2 + int(rng.next() % 2);
        const auto rspec = testutil::random_point_spec(rng, k);
        const auto spec = testutil::to_double(rspec);
        if (!realizable_simplex(spec)) continue;  // degenerate draw
        auto placed = testutil::place_points(spec);
        REQUIRE(placed.has_value());
        // |det[x_1-x_0, ..., x_k-x_0]| / k!
        std::vector<double> m(std::size_t(k * k));
        for (int i = 0; i < k; ++i)
            for (int b = 0; b < k; ++b)
                m[std::size_t(i * k + b)] =
                    (*placed)[std::size_t(i + 1)][std::size_t(b)] - (*placed)[0][std::size_t(b)];
        double det = (k == 2) ? m[0] * m[3] - m[1] * m[2]
                              : m[0] * (m[4] * m[8] - m[5] * m[7])
                                    - m[1] * (m[3] * m[8] - m[5] * m[6])
                                    + m[2] * (m[3] * m[7] - m[4] * m[6]);
        double fact = 1;
        for (int i = 2; i <= k; ++i) fact *= i;
        const double brute = std::fabs(det) / fact;
        CHECK_THAT(simplex_volume(spec), WithinRel(brute, 1e-9));
        ++done;
    }
    CHECK(done == 1000);
}

TEST_CASE("realizability predicate matches the placement oracle")
{
    Rng rng(15);
    int checked = 0;
    for (int trial = 0; checked < 200 && trial < 4000; ++trial) {
        const int k = 2 + int(rng.next() % 2);
        const auto rspec = (trial % 2 == 0) ? testutil::random_point_spec(rng, k)
                                            : testutil::random_table_spec(rng, k);
        const auto spec = testutil::to_double(rspec);
        // keep clear of the degenerate boundary, where any floating oracle
        // is allowed to disagree
        double scale = 0.0;
        for (double x : spec.table) scale = std::max(scale, std::fabs(x));
        double cm = cayley_menger_det(spec);
        if (std::fabs(cm) < 1e-6 * std::pow(scale, k)) continue;
        CHECK(realizable_simplex(rspec) == testutil::place_points(spec).has_value());
        ++checked;
    }
    CHECK(checked == 200);
}
