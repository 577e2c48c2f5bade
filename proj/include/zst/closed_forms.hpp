#pragma once

#include <cstddef>
#include <vector>

#include "zst/boundary.hpp"
#include "zst/int.hpp"
#include "zst/triangle.hpp"

namespace zst {

// General term for interior cells (0 < j < i < n) straight from the
// boundaries:
//   t(i,j) = sum_{k=1}^{i-j} C(i-k-1, j-1) (-1)^{i-k} a_k
//          + sum_{k=1}^{j}   C(i-k-1, i-j-1) (-1)^{i-k} b_k
// Edges are not covered; they come from the spec by definition.
Int cell_closed_form(const BoundarySpec& spec, std::size_t i, std::size_t j);

struct RowSums {
    std::vector<Int> per_row;  // S_0 .. S_{n-1}
    Int total;                 // S
};

// Direct summation of the generated cells.
RowSums row_sums_direct(const Triangle& t);

// S_i = a_i + b_i - sum_{k=1}^{i-1} (-2)^{i-k-1} (a_k + b_k) for i >= 2;
// rows 0 and 1 are summed directly.
Int row_sum_closed(const BoundarySpec& spec, std::size_t i);

// Whole-triangle sum with last row index m = n-1:
//   S = a_0 + a_m + b_m + (1/3) sum_{k=1}^{m-1} (2 + (-2)^{m-k}) (a_k + b_k)
// The division is always exact (2 + (-2)^p is divisible by 3 for p >= 1);
// the sum is formed first and divided after an exactness check. Triangles
// with fewer than three rows are summed directly.
Int total_sum_closed(const BoundarySpec& spec);

// Adjacent-row recursion: S_i = (a_i + b_i) + (a_prev + b_prev) - 2 S_prev.
Int row_sum_step(const Int& s_prev, const Int& a_i, const Int& b_i,
                 const Int& a_prev, const Int& b_prev);

}  // namespace zst
