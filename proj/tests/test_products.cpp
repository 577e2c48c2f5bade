#include <doctest.h>

#include <random>

#include "support.hpp"
#include "zst/errors.hpp"
#include "zst/fixtures.hpp"
#include "zst/products.hpp"
#include "zst/verify.hpp"

using namespace zst;

namespace {

std::pair<Triangle, BoundarySpec> fixture(const char* name) {
    TriangleDocument doc = fixture_document(name);
    return {doc.triangle, doc.spec};
}

}  // namespace

TEST_CASE("products_direct on triangle3 gives the boundary identities") {
    auto [t, spec] = fixture("triangle3");
    ProductVectors p = products_direct(t, spec);
    for (std::size_t i = 0; i < 9; ++i) {
        CHECK(p.s0[i] == (i % 2 == 0 ? 1 : -1));  // s0(i) = a_i = (-1)^i
        CHECK(p.s0[i] == spec.a[i]);
    }
    for (std::size_t i = 1; i < 9; ++i) CHECK(p.sm1[i] == 0);
    for (std::size_t i = 1; i + 1 < 9; ++i)
        CHECK(p.s1[i] == spec.a[0] * (spec.a[i] + spec.a[i + 1]) - spec.a[i]);
}

TEST_CASE("products of the zero triangle vanish") {
    BoundarySpec zero{std::vector<Int>(5, Int(0)), std::vector<Int>(5, Int(0))};
    Triangle t = generate_triangle(zero);
    ProductVectors direct = products_direct(t, zero);
    ProductVectors recursive = products_recursive(zero, t);
    CHECK(direct == recursive);
    for (const Int& v : direct.s0) CHECK(v == 0);
    for (const Int& v : direct.s1) CHECK(v == 0);
    for (const Int& v : direct.sm1) CHECK(v == 0);
}

TEST_CASE("base cases hold exactly") {
    std::mt19937_64 rng(301);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + rng() % 15;
        BoundarySpec spec = test::random_spec(rng, n);
        Triangle t = generate_triangle(spec);
        ProductVectors p = products_direct(t, spec);
        CHECK(p.s0[0] == spec.a[0] * spec.b[0]);
        CHECK(p.s1[0] == spec.a[1] * spec.b[0]);
        CHECK(p.sm1[1] == spec.a[0] * spec.b[1]);
    }
}

TEST_CASE("recursive path equals the dot products") {
    auto [t7, spec7] = fixture("triangle7");
    CHECK(products_recursive(spec7, t7) == products_direct(t7, spec7));

    std::mt19937_64 rng(302);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + rng() % 15;
        BoundarySpec spec = test::random_spec(rng, n);
        Triangle t = generate_triangle(spec);
        CHECK(products_recursive(spec, t) == products_direct(t, spec));
    }
}

TEST_CASE("products_recursive needs two rows") {
    BoundarySpec one{{Int(3)}, {Int(3)}};
    Triangle t = generate_triangle(one);
    CHECK_THROWS_AS(products_recursive(one, t), InputError);
    ProductVectors p = products_direct(t, one);  // n=1 direct is fine
    CHECK(p.s0[0] == 9);
    CHECK(p.s1.empty());
}

TEST_CASE("squared_via_recurrence equals exact multiplication") {
    auto [t7, spec7] = fixture("triangle7");
    LowerTriangularMatrix m7 = to_matrix(t7);
    CHECK(squared_via_recurrence(t7, spec7) == mat_mul(m7, m7));

    auto [t3, spec3] = fixture("triangle3");
    CHECK(squared_via_recurrence(t3, spec3) == to_matrix(t3));  // idempotent

    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + rng() % 16;
        BoundarySpec spec = test::random_spec(rng, n);
        Triangle t = generate_triangle(spec);
        LowerTriangularMatrix square = squared_via_recurrence(t, spec);
        LowerTriangularMatrix m = to_matrix(t);
        CHECK(square == mat_mul(m, m));
        for (std::size_t i = 0; i < n; ++i)
            CHECK(square.at(i, i) == spec.b[i] * spec.b[i]);
    }
}
