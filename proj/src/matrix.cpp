#include "zst/matrix.hpp"

namespace zst {

const Int LowerTriangularMatrix::zero_ = 0;

LowerTriangularMatrix LowerTriangularMatrix::identity(std::size_t n) {
    LowerTriangularMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.ref(i, i) = 1;
    return m;
}

LowerTriangularMatrix LowerTriangularMatrix::subdiagonal_ones(std::size_t n) {
    LowerTriangularMatrix m(n);
    for (std::size_t i = 1; i < n; ++i) m.ref(i, i - 1) = 1;
    return m;
}

bool LowerTriangularMatrix::is_zero() const {
    for (const Int& v : cells_)
        if (v != 0) return false;
    return true;
}

bool LowerTriangularMatrix::strictly_lower() const {
    for (std::size_t i = 0; i < n_; ++i)
        if (at(i, i) != 0) return false;
    return true;
}

}  // namespace zst
