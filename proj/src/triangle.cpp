#include "zst/triangle.hpp"

#include <cstddef>

#include "zst/errors.hpp"

namespace zst {

namespace {

// Interior cells of one row are independent given the row above; threading
// pays off only once rows are long.
constexpr std::ptrdiff_t kParallelRowCells = 512;

void fill_row(std::vector<Int>& row, const std::vector<Int>& prev, bool threaded) {
    const std::ptrdiff_t last = static_cast<std::ptrdiff_t>(row.size()) - 1;
#pragma omp parallel for if (threaded && last > kParallelRowCells) schedule(static)
    for (std::ptrdiff_t j = 1; j < last; ++j)
        row[j] = -(prev[j - 1] + prev[j]);
}

Triangle generate_impl(const BoundarySpec& spec, bool threaded) {
    spec.validate();
    const std::size_t n = spec.n();
    Triangle t;
    t.rows.resize(n);
    t.rows[0] = {spec.a[0]};
    for (std::size_t i = 1; i < n; ++i) {
        std::vector<Int>& row = t.rows[i];
        row.resize(i + 1);
        row[0] = spec.a[i];
        row[i] = spec.b[i];
        fill_row(row, t.rows[i - 1], threaded);
    }
    return t;
}

}  // namespace

Triangle generate_triangle(const BoundarySpec& spec) { return generate_impl(spec, true); }

Triangle generate_triangle_serial(const BoundarySpec& spec) { return generate_impl(spec, false); }

BoundarySpec Triangle::boundary() const {
    BoundarySpec spec;
    spec.a.reserve(n());
    spec.b.reserve(n());
    for (const std::vector<Int>& row : rows) {
        spec.a.push_back(row.front());
        spec.b.push_back(row.back());
    }
    return spec;
}

bool zero_sum_holds(const Triangle& t) {
    for (std::size_t i = 2; i < t.n(); ++i)
        for (std::size_t j = 1; j < i; ++j)
            if (t.rows[i][j] + t.rows[i - 1][j - 1] + t.rows[i - 1][j] != 0) return false;
    return true;
}

SymmetryKind symmetry_kind(const Triangle& t) {
    bool symmetric = true;
    bool anti = true;
    for (std::size_t i = 0; i < t.n() && (symmetric || anti); ++i) {
        for (std::size_t j = 0; 2 * j <= i; ++j) {
            const Int& left = t.rows[i][j];
            const Int& right = t.rows[i][i - j];
            if (left != right) symmetric = false;
            if (left != -right) anti = false;
        }
    }
    if (symmetric) return SymmetryKind::Symmetric;
    if (anti) return SymmetryKind::AntiSymmetric;
    return SymmetryKind::None;
}

LowerTriangularMatrix to_matrix(const Triangle& t) {
    LowerTriangularMatrix m(t.n());
    for (std::size_t i = 0; i < t.n(); ++i)
        for (std::size_t j = 0; j <= i; ++j) m.ref(i, j) = t.rows[i][j];
    return m;
}

}  // namespace zst
