#pragma once

#include <cstddef>
#include <vector>

#include "zst/int.hpp"
#include "zst/matrix.hpp"

namespace zst {

// B_L * T: every row moves down one, row 0 becomes zero. Implemented as a
// row move; equality with literal B_L multiplication is a test.
LowerTriangularMatrix shift_down(const LowerTriangularMatrix& t);

// T * B_L: every column moves left one, the last column becomes zero.
LowerTriangularMatrix shift_left(const LowerTriangularMatrix& t);

// I + N for strictly lower-triangular N.
LowerTriangularMatrix unipotent_from_nilpotent(const LowerTriangularMatrix& n);

// 2I - S, valid when S - I is nilpotent of index <= 2 (verified; throws
// UnipotentIndexError with the violating power otherwise). The product with
// S is exactly I.
LowerTriangularMatrix unipotent_inverse(const LowerTriangularMatrix& s);

struct UnipotentPair {
    LowerTriangularMatrix sd;  // I + B_L T
    LowerTriangularMatrix sl;  // I + T B_L
};

// Builds the idempotent triangle T for (a0, odds, n) and returns the two
// index-2 unipotent factors whose product is the full Jordan block of
// eigenvalue 1: S_D * S_L == I + B_L.
UnipotentPair jordan_factorization(int a0, const std::vector<Int>& odd_entries, std::size_t n);

}  // namespace zst
