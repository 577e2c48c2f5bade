#include "zst/shift.hpp"

#include "zst/errors.hpp"
#include "zst/special.hpp"
#include "zst/triangle.hpp"
#include "zst/verify.hpp"

namespace zst {

LowerTriangularMatrix shift_down(const LowerTriangularMatrix& t) {
    const std::size_t n = t.size();
    LowerTriangularMatrix r(n);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) r.ref(i, j) = t.at(i - 1, j);
    return r;
}

LowerTriangularMatrix shift_left(const LowerTriangularMatrix& t) {
    const std::size_t n = t.size();
    LowerTriangularMatrix r(n);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) r.ref(i, j) = t.at(i, j + 1);
    return r;
}

LowerTriangularMatrix unipotent_from_nilpotent(const LowerTriangularMatrix& n) {
    if (!n.strictly_lower())
        throw InputError("nilpotent part must have an all-zero diagonal");
    LowerTriangularMatrix s = n;
    for (std::size_t i = 0; i < n.size(); ++i) s.ref(i, i) += 1;
    return s;
}

LowerTriangularMatrix unipotent_inverse(const LowerTriangularMatrix& s) {
    const std::size_t n = s.size();
    LowerTriangularMatrix nil(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) nil.ref(i, j) = s.at(i, j);
        nil.ref(i, i) = s.at(i, i) - 1;
    }
    std::optional<std::size_t> index = nilpotency_index(nil);
    if (!index) throw UnipotentIndexError(0);
    if (*index > 2) throw UnipotentIndexError(*index - 1);  // (S-I)^{k-1} != 0
    LowerTriangularMatrix inv(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) inv.ref(i, j) = -s.at(i, j);
        inv.ref(i, i) = Int(2) - s.at(i, i);
    }
    return inv;
}

UnipotentPair jordan_factorization(int a0, const std::vector<Int>& odd_entries, std::size_t n) {
    SpecialBuildRequest req{BuildKind::Idempotent, a0, odd_entries, n};
    const LowerTriangularMatrix t = to_matrix(build_idempotent(req));
    return {unipotent_from_nilpotent(shift_down(t)), unipotent_from_nilpotent(shift_left(t))};
}

}  // namespace zst
