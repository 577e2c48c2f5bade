#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "zst/boundary.hpp"
#include "zst/errors.hpp"

using namespace zst;

namespace {

std::vector<Int> ints(std::initializer_list<long> values) {
    std::vector<Int> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

}  // namespace

TEST_CASE("expand_boundary patterns") {
    CHECK(expand_boundary("const:1", 3) == ints({1, 1, 1}));
    CHECK(expand_boundary("cycle:0,-1,0,1", 5) == ints({0, -1, 0, 1, 0}));
    CHECK(expand_boundary("alt:0,-1", 4) == ints({0, -1, 0, -1}));
    CHECK(expand_boundary("list:5,6,7", 2) == ints({5, 6}));  // extras ignored
    CHECK(expand_boundary("const:-12345678901234567890123", 1).front() ==
          Int("-12345678901234567890123"));
}

TEST_CASE("expand_boundary rejects malformed input") {
    CHECK_THROWS_AS(expand_boundary("const:1", 0), InputError);
    CHECK_THROWS_AS(expand_boundary("nope:1", 2), InputError);
    CHECK_THROWS_AS(expand_boundary("justtext", 2), InputError);
    CHECK_THROWS_AS(expand_boundary("const:1,2", 2), InputError);
    CHECK_THROWS_AS(expand_boundary("alt:1", 2), InputError);
    CHECK_THROWS_AS(expand_boundary("list:1,2", 3), InputError);
    CHECK_THROWS_AS(expand_boundary("cycle:1,x", 2), InputError);
    CHECK_THROWS_AS(expand_boundary("cycle:", 2), InputError);
    CHECK_THROWS_AS(expand_boundary("const:01", 1), InputError);  // not canonical
}

TEST_CASE("expand_boundary file pattern") {
    const char* path = "zst_boundary_values.tmp";
    {
        std::ofstream out(path);
        out << "4, -5\n6\t7 8\n";
    }
    CHECK(expand_boundary(std::string("file:") + path, 4) == ints({4, -5, 6, 7}));
    CHECK(expand_boundary_up_to(std::string("file:") + path, 9) == ints({4, -5, 6, 7, 8}));
    CHECK_THROWS_AS(expand_boundary(std::string("file:") + path, 6), InputError);
    CHECK_THROWS_AS(expand_boundary("file:/definitely/not/here", 1), InputError);
    std::remove(path);
}

TEST_CASE("expand_boundary_up_to keeps short lists") {
    CHECK(expand_boundary_up_to("list:1,2", 5) == ints({1, 2}));
    CHECK(expand_boundary_up_to("list:1,2,3", 2) == ints({1, 2}));
    CHECK(expand_boundary_up_to("const:7", 3) == ints({7, 7, 7}));
}

TEST_CASE("make_spec validates the apex") {
    BoundarySpec spec = make_spec("const:1", "list:1,0,1", 3);
    CHECK(spec.a == ints({1, 1, 1}));
    CHECK(spec.b == ints({1, 0, 1}));
    CHECK_THROWS_AS(make_spec("const:0", "const:1", 3), InputError);

    BoundarySpec bad{ints({1, 2}), ints({1})};
    CHECK_THROWS_AS(bad.validate(), InputError);
    CHECK_THROWS_AS(BoundarySpec{}.validate(), InputError);
}
