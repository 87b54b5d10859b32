#include <catch_amalgamated.hpp>

#include <set>

#include "affdev/embedded.hpp"
#include "affdev/simplepath.hpp"
#include "testutil.hpp"

using namespace affdev;

TEST_CASE("simplicity predicate")
{
    CHECK(is_simple_development(extract_development(make_cube())));
    CHECK(is_simple_development(extract_development(make_prism(3, 1.0, 0.8))));
    CHECK(is_simple_development(extract_development(make_prism(6, 1.0, 1.3))));
    CHECK(!is_simple_development(extract_development(testutil::make_octahedron())));
    CHECK(!is_simple_development(extract_development(make_unit_bipyramid3())));
    // boundary developments are out of scope for the predicate
    const Development tri = Development::parse(R"({
      "faces": [{"id": "t", "vertices": [[0,0],[1,0],[0,1]]}],
      "gluings": [],
      "vertexClasses": [
        {"id": "a", "corners": [["t",0]]}, {"id": "b", "corners": [["t",1]]},
        {"id": "c", "corners": [["t",2]]}
      ]
    })");
    CHECK_THROWS_AS(is_simple_development(tri), Error);
}

namespace {

/// Independent check of both path conditions.
void check_gamma_conditions(const Development& dev, const EdgePath& path)
{
    REQUIRE(!path.vertices.empty());
    for (int v : path.vertices) CHECK(dev.valency(v) == 3);
    // consecutive vertices joined by the listed edges, no edge repeated
    std::set<int> used;
    REQUIRE(path.edges.size() + 1 == path.vertices.size());
    for (std::size_t i = 0; i < path.edges.size(); ++i) {
        const int e = path.edges[i];
        CHECK(used.insert(e).second);
        const auto& ends = dev.edge(e).endpoints;
        REQUIRE(ends.size() == 2);
        const std::set<int> got{ends.begin(), ends.end()};
        const std::set<int> want{path.vertices[i], path.vertices[i + 1]};
        CHECK(got == want);
    }
    // face coverage
    std::set<int> touched;
    for (int v : path.vertices)
        for (int f : dev.vertex_faces(v)) touched.insert(f);
    CHECK(static_cast<int>(touched.size()) == dev.face_count());
}

}  // namespace

TEST_CASE("covering valency-3 paths")
{
    SECTION("4-gonal trapezohedron has a covering path")
    {
        const Development dev = extract_development(make_trapezohedron(4));
        const auto path = find_gamma_path(dev);
        REQUIRE(path.has_value());
        check_gamma_conditions(dev, *path);
    }
    SECTION("octahedron has no valency-3 vertices at all")
    {
        const Development dev = extract_development(testutil::make_octahedron());
        CHECK(!find_gamma_path(dev).has_value());
    }
    SECTION("cube paths exist and satisfy the conditions")
    {
        const Development dev = extract_development(make_cube());
        const auto path = find_gamma_path(dev);
        REQUIRE(path.has_value());
        check_gamma_conditions(dev, *path);
    }
}

TEST_CASE("face-level verdicts")
{
    Rng rng(71);
    SECTION("cube vs an affine image: conditional positive")
    {
        const EmbeddedPolyhedron cube = make_cube();
        const AffineMap3D a = random_affine_map(rng);
        const Development da = extract_development(cube);
        const Development db = extract_development(apply_affine(cube, a));
        const CombinatorialMap map = identity_correspondence(da, db);
        CHECK(simple_affine_verdict(da, db, map) == VerdictKind::AffineEquivalentConditional);
    }
    SECTION("cube vs a trapezoid prism: unconditional negative")
    {
        const EmbeddedPolyhedron cube = make_cube();
        PlanarPolygon trap{{{0, 0}, {2, 0}, {1.5, 1}, {0.5, 1}}};  // parallel sides 1 and 2
        const EmbeddedPolyhedron hexa = make_prism(4, trap, 1.0);
        const Development da = extract_development(cube);
        const Development db = extract_development(hexa);
        const CombinatorialMap map = identity_correspondence(da, db);
        CHECK(simple_affine_verdict(da, db, map) == VerdictKind::NotAffineEquivalent);
    }
    SECTION("octahedron vs octahedron: no fast path applies")
    {
        const Development dev = extract_development(testutil::make_octahedron());
        const CombinatorialMap map = identity_correspondence(dev, dev);
        CHECK(simple_affine_verdict(dev, dev, map) == VerdictKind::Inconclusive);
    }
}

TEST_CASE("fast path is sound on generated simple pairs")
{
    Rng rng(72);
    for (int trial = 0; trial < 30; ++trial) {
        EmbeddedPolyhedron p = (trial % 3 == 0)   ? make_cube()
                               : (trial % 3 == 1) ? make_prism(3 + int(rng.next() % 4), 1.0, 0.9)
                                                  : make_trapezohedron(4 + int(rng.next() % 3));
        const AffineMap3D a = random_affine_map(rng);
        const Development da = extract_development(p);
        const Development db = extract_development(apply_affine(p, a));
        const CombinatorialMap map = identity_correspondence(da, db);
        CHECK(simple_affine_verdict(da, db, map) != VerdictKind::NotAffineEquivalent);
    }
}
