#include <doctest.h>

#include <random>

#include "support.hpp"
#include "zst/boundary.hpp"
#include "zst/errors.hpp"
#include "zst/fixtures.hpp"
#include "zst/triangle.hpp"

using namespace zst;

TEST_CASE("generate_triangle reproduces the reference triangles") {
    // triangle7: zero left edge, mixed right edge
    BoundarySpec t7{std::vector<Int>(9, Int(0)),
                    {Int(0), Int(-1), Int(1), Int(-1), Int(-1), Int(1), Int(1), Int(-1), Int(1)}};
    Triangle gen7 = generate_triangle(t7);
    CHECK(gen7 == fixture_document("triangle7").triangle);
    CHECK(gen7.rows[8] == std::vector<Int>{Int(0), Int(1), Int(7), Int(21), Int(33), Int(27),
                                           Int(11), Int(3), Int(1)});

    // triangle8: -1 left edge under apex 1, alternating right edge
    BoundarySpec t8{{Int(1), Int(-1), Int(-1), Int(-1), Int(-1), Int(-1), Int(-1), Int(-1),
                     Int(-1)},
                    {Int(1), Int(0), Int(1), Int(0), Int(1), Int(0), Int(1), Int(0), Int(1)}};
    Triangle gen8 = generate_triangle(t8);
    CHECK(gen8 == fixture_document("triangle8").triangle);
    CHECK(gen8.rows[8] == std::vector<Int>{Int(-1), Int(1), Int(4), Int(14), Int(24), Int(24),
                                           Int(14), Int(4), Int(1)});
}

TEST_CASE("generate_triangle zero boundary and apex validation") {
    BoundarySpec zero{std::vector<Int>(3, Int(0)), std::vector<Int>(3, Int(0))};
    Triangle t = generate_triangle(zero);
    CHECK(t.rows == std::vector<std::vector<Int>>{{Int(0)}, {Int(0), Int(0)},
                                                  {Int(0), Int(0), Int(0)}});

    BoundarySpec bad{{Int(1), Int(0)}, {Int(2), Int(0)}};
    CHECK_THROWS_AS(generate_triangle(bad), InputError);
}

TEST_CASE("zero-sum rule holds on random triangles") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + rng() % 16;
        Triangle t = generate_triangle(test::random_spec(rng, n));
        CHECK(zero_sum_holds(t));
        // edges round-trip through boundary()
        BoundarySpec back = t.boundary();
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(back.a[i] == t.rows[i].front());
            CHECK(back.b[i] == t.rows[i].back());
        }
    }
}

TEST_CASE("generation is deterministic and thread count independent") {
    std::mt19937_64 rng(102);
    BoundarySpec spec = test::random_spec(rng, 700);  // long rows take the threaded path
    Triangle a = generate_triangle(spec);
    Triangle b = generate_triangle(spec);
    Triangle c = generate_triangle_serial(spec);
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("symmetry classification") {
    BoundarySpec sym{std::vector<Int>(4, Int(1)), std::vector<Int>(4, Int(1))};
    CHECK(symmetry_kind(generate_triangle(sym)) == SymmetryKind::Symmetric);

    BoundarySpec anti{{Int(0), Int(1), Int(2)}, {Int(0), Int(-1), Int(-2)}};
    Triangle anti_t = generate_triangle(anti);
    CHECK(symmetry_kind(anti_t) == SymmetryKind::AntiSymmetric);
    CHECK(anti_t.rows[2][1] == 0);  // middle cell of an even row

    CHECK(symmetry_kind(fixture_document("triangle7").triangle) == SymmetryKind::None);

    // random a == b and a == -b families
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = 2 + rng() % 10;
        std::vector<Int> edge = test::random_values(rng, n);
        CHECK(symmetry_kind(generate_triangle({edge, edge})) == SymmetryKind::Symmetric);

        std::vector<Int> neg;
        for (const Int& v : edge) neg.push_back(-v);
        neg[0] = edge[0] = 0;  // shared apex forces a0 = 0
        Triangle anti_rand = generate_triangle({edge, neg});
        SymmetryKind kind = symmetry_kind(anti_rand);
        CHECK((kind == SymmetryKind::AntiSymmetric || kind == SymmetryKind::Symmetric));
        for (std::size_t i = 0; i < n; i += 2) CHECK(anti_rand.rows[i][i / 2] == 0);
    }
}

TEST_CASE("to_matrix embeds the triangle") {
    Triangle small{{{Int(1)}, {Int(-1), Int(0)}}};
    LowerTriangularMatrix m = to_matrix(small);
    CHECK(m.size() == 2);
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(0, 1) == 0);
    CHECK(m.at(1, 0) == -1);
    CHECK(m.at(1, 1) == 0);

    LowerTriangularMatrix t7 = to_matrix(fixture_document("triangle7").triangle);
    CHECK(t7.size() == 9);
    CHECK(t7.at(8, 4) == 33);
    CHECK(t7.at(4, 8) == 0);

    Triangle unit{{{Int(5)}}};
    CHECK(to_matrix(unit).at(0, 0) == 5);
}
