#pragma once

#include <cstddef>
#include <vector>

#include "zst/boundary.hpp"
#include "zst/int.hpp"
#include "zst/matrix.hpp"
#include "zst/triangle.hpp"

namespace zst {

// Triangle matrix applied to the left boundary column, in three alignments:
//   s0(i)  = sum_{k=0}^{i} t(i,k) a_k        (boundary as is)
//   s1(i)  = sum_{k=0}^{i} t(i,k) a_{k+1}    (shifted up; defined for i <= n-2)
//   sm1(i) = sum_{k=1}^{i} t(i,k) a_{k-1}    (shifted down; defined for i >= 1)
// s1 has length n-1; sm1 is stored with index from 1 and sm1[0] fixed at 0.
struct ProductVectors {
    std::vector<Int> s0;
    std::vector<Int> s1;
    std::vector<Int> sm1;

    bool operator==(const ProductVectors& other) const {
        return s0 == other.s0 && s1 == other.s1 && sm1 == other.sm1;
    }
};

// Literal dot products of the definitions above.
ProductVectors products_direct(const Triangle& t, const BoundarySpec& spec);

// The recursive relations, evaluated forward:
//   sm1(i) = a_{i-1} (b_{i-1} + b_i) - sm1(i-1) - s0(i-1)              (i >= 2)
//   s0(i)  = a_0 (a_{i-1} + a_i) + a_i (b_{i-1} + b_i) - s0(i-1) - s1(i-1)
//   s1(i)  = a_0 (a_i + a_{i+1}) + a_{i+1} (b_i + b_{i+1}) - s0(i) - s0(i+1)
// with base cases s0(0) = a_0^2, s1(0) = a_0 a_1, sm1(1) = a_0 b_1. The s0
// chain consumes s1(i-1) by its dot-product definition (the relations alone
// leave the s1 interior values free); s1 is then recovered from the last
// relation once s0 is complete. Requires n >= 2. Must equal products_direct.
ProductVectors products_recursive(const BoundarySpec& spec, const Triangle& t);

// T^2 assembled from the squared-matrix recursion instead of O(n^3)
// multiplication: zero above the diagonal, b_i^2 on it, s0(i) in column 0,
// and for interior cells
//   T2(i,j) = T2(i-1,j-1) + t(i,j) (b_{i-1} + b_i) - t(i-1,j-1) (b_{j-1} + b_j).
// Must equal mat_mul(T, T).
LowerTriangularMatrix squared_via_recurrence(const Triangle& t, const BoundarySpec& spec);

}  // namespace zst
