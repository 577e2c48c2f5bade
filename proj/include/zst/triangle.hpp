#pragma once

#include <cstddef>
#include <vector>

#include "zst/boundary.hpp"
#include "zst/int.hpp"
#include "zst/matrix.hpp"

namespace zst {

// Ragged rows t(i,j), 0 <= j <= i < n, obeying the zero-sum rule: every
// interior cell plus the two cells directly above it sums to zero,
//   t(i,j) + t(i-1,j-1) + t(i-1,j) == 0   (0 < j < i).
struct Triangle {
    std::vector<std::vector<Int>> rows;

    std::size_t n() const { return rows.size(); }
    const Int& at(std::size_t i, std::size_t j) const { return rows[i][j]; }

    // Recovers the generating boundaries from the edges.
    BoundarySpec boundary() const;

    bool operator==(const Triangle& other) const { return rows == other.rows; }
};

enum class SymmetryKind { Symmetric, AntiSymmetric, None };

// Interior cells by t(i,j) = -(t(i-1,j-1) + t(i-1,j)), edges from the spec.
// Row interiors are filled in parallel once rows get long; results are
// bit-identical to generate_triangle_serial.
Triangle generate_triangle(const BoundarySpec& spec);
Triangle generate_triangle_serial(const BoundarySpec& spec);

// True when the zero-sum rule holds at every interior cell.
bool zero_sum_holds(const Triangle& t);

// Symmetric iff t(i,j) == t(i,i-j) everywhere, AntiSymmetric iff
// t(i,j) == -t(i,i-j) everywhere (the all-zero triangle reports Symmetric).
SymmetryKind symmetry_kind(const Triangle& t);

// Embeds the triangle as a lower-triangular matrix, upper part zero.
LowerTriangularMatrix to_matrix(const Triangle& t);

}  // namespace zst
