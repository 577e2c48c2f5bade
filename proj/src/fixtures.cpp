#include "zst/fixtures.hpp"

#include <array>

#include "zst/errors.hpp"

namespace zst {

namespace {

// Row-major ragged cell tables, nine rows each.
constexpr int kTriangle3[] = {
    1,
    -1, 0,
    1, 1, 1,
    -1, -2, -2, 0,
    1, 3, 4, 2, 1,
    -1, -4, -7, -6, -3, 0,
    1, 5, 11, 13, 9, 3, 1,
    -1, -6, -16, -24, -22, -12, -4, 0,
    1, 7, 22, 40, 46, 34, 16, 4, 1,
};

constexpr int kTriangle4[] = {
    0,
    -1, 1,
    0, 0, 0,
    1, 0, 0, 1,
    0, -1, 0, -1, 0,
    -1, 1, 1, 1, 1, 1,
    0, 0, -2, -2, -2, -2, 0,
    1, 0, 2, 4, 4, 4, 2, 1,
    0, -1, -2, -6, -8, -8, -6, -3, 0,
};

constexpr int kTriangle7[] = {
    0,
    0, -1,
    0, 1, 1,
    0, -1, -2, -1,
    0, 1, 3, 3, -1,
    0, -1, -4, -6, -2, 1,
    0, 1, 5, 10, 8, 1, 1,
    0, -1, -6, -15, -18, -9, -2, -1,
    0, 1, 7, 21, 33, 27, 11, 3, 1,
};

constexpr int kTriangle8[] = {
    1,
    -1, 0,
    -1, 1, 1,
    -1, 0, -2, 0,
    -1, 1, 2, 2, 1,
    -1, 0, -3, -4, -3, 0,
    -1, 1, 3, 7, 7, 3, 1,
    -1, 0, -4, -10, -14, -10, -4, 0,
    -1, 1, 4, 14, 24, 24, 14, 4, 1,
};

constexpr std::size_t kRows = 9;

Triangle from_table(const int* cells) {
    Triangle t;
    t.rows.resize(kRows);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < kRows; ++i) {
        t.rows[i].reserve(i + 1);
        for (std::size_t j = 0; j <= i; ++j) t.rows[i].emplace_back(cells[pos++]);
    }
    return t;
}

DocMeta idempotent_meta(int a0, std::vector<Int> odd) {
    DocMeta meta;
    meta.kind = "idempotent";
    meta.a0 = a0;
    meta.odd = std::move(odd);
    return meta;
}

}  // namespace

const std::vector<std::string_view>& fixture_names() {
    static const std::vector<std::string_view> names = {"triangle3", "triangle4", "triangle7",
                                                        "triangle8"};
    return names;
}

bool is_fixture_name(std::string_view name) {
    for (std::string_view candidate : fixture_names())
        if (candidate == name) return true;
    return false;
}

TriangleDocument fixture_document(std::string_view name) {
    if (name == "triangle3")
        return make_document(from_table(kTriangle3),
                             idempotent_meta(1, {Int(-1), Int(-1), Int(-1), Int(-1)}));
    if (name == "triangle4")
        return make_document(from_table(kTriangle4),
                             idempotent_meta(0, {Int(-1), Int(1), Int(-1), Int(1)}));
    if (name == "triangle7") return make_document(from_table(kTriangle7));
    if (name == "triangle8") return make_document(from_table(kTriangle8));
    throw InputError("unknown fixture '" + std::string(name) +
                     "'; expected triangle3|triangle4|triangle7|triangle8");
}

}  // namespace zst
