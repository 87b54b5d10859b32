#include <catch_amalgamated.hpp>

#include "affdev/interval.hpp"
#include "affdev/embedded.hpp"  // Rng

using namespace affdev;

namespace {
double pick(Rng& rng, Interval x) { return x.lo + (x.hi - x.lo) * rng.uniform(); }
Interval random_interval(Rng& rng, double span)
{
    const double a = rng.uniform(-span, span), b = rng.uniform(-span, span);
    return {std::min(a, b), std::max(a, b)};
}
}  // namespace

TEST_CASE("interval arithmetic encloses pointwise results")
{
    Rng rng(2024);
    for (int trial = 0; trial < 2000; ++trial) {
        const Interval a = random_interval(rng, 10.0), b = random_interval(rng, 10.0);
        const double x = pick(rng, a), y = pick(rng, b);
        CHECK((a + b).contains(x + y));
        CHECK((a - b).contains(x - y));
        CHECK((a * b).contains(x * y));
        CHECK(square(a).contains(x * x));
        if (!b.contains_zero()) CHECK(divide(a, b).contains(x / y));
        if (a.lo >= 0.0) CHECK(sqrt_nonneg(a).contains(std::sqrt(x)));
    }
}

TEST_CASE("interval square is tight at zero-straddling inputs")
{
    const Interval s = square(Interval{-2.0, 1.0});
    CHECK(s.lo <= 0.0);
    CHECK(s.hi >= 4.0);
    CHECK(s.hi < 4.0 + 1e-12);
}

TEST_CASE("intersection and hull behave as set operations")
{
    const Interval a{1.0, 3.0}, b{2.0, 5.0}, c{4.0, 6.0};
    CHECK(intersect(a, b).lo == 2.0);
    CHECK(intersect(a, b).hi == 3.0);
    CHECK(intersect(a, c).empty_as_set());
    CHECK(Interval::hull(a, c).lo == 1.0);
    CHECK(Interval::hull(a, c).hi == 6.0);
    CHECK(overlaps(a, b));
    CHECK(!overlaps(a, c));
}
