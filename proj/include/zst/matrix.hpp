#pragma once

#include <cstddef>
#include <vector>

#include "zst/int.hpp"

namespace zst {

// n x n exact-integer lower-triangular matrix, packed row-major over the
// lower part (the upper part is structurally zero). Indices are 0-based;
// when built from a triangle, at(i,j) == t(i,j).
class LowerTriangularMatrix {
  public:
    LowerTriangularMatrix() = default;
    explicit LowerTriangularMatrix(std::size_t n) : n_(n), cells_(n * (n + 1) / 2) {}

    static LowerTriangularMatrix identity(std::size_t n);
    // B_L: ones on the first subdiagonal. Left-multiplying shifts rows down,
    // right-multiplying shifts columns left.
    static LowerTriangularMatrix subdiagonal_ones(std::size_t n);

    std::size_t size() const { return n_; }

    const Int& at(std::size_t i, std::size_t j) const {
        return j > i ? zero_ : cells_[index(i, j)];
    }
    Int& ref(std::size_t i, std::size_t j) { return cells_[index(i, j)]; }

    bool is_zero() const;
    bool strictly_lower() const;  // all diagonal entries zero

    bool operator==(const LowerTriangularMatrix& other) const {
        return n_ == other.n_ && cells_ == other.cells_;
    }
    bool operator!=(const LowerTriangularMatrix& other) const { return !(*this == other); }

  private:
    std::size_t index(std::size_t i, std::size_t j) const { return i * (i + 1) / 2 + j; }

    std::size_t n_ = 0;
    std::vector<Int> cells_;
    static const Int zero_;
};

}  // namespace zst
