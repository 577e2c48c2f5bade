#include "zst/closed_forms.hpp"

#include "zst/errors.hpp"

namespace zst {

Int cell_closed_form(const BoundarySpec& spec, std::size_t i, std::size_t j) {
    spec.validate();
    if (i >= spec.n() || j == 0 || j >= i)
        throw InputError("cell_closed_form covers interior cells only (0 < j < i < n)");
    Int acc = 0;
    for (std::size_t k = 1; k + j <= i; ++k) {
        Int term = binomial(i - k - 1, j - 1) * spec.a[k];
        if ((i - k) % 2 != 0) acc -= term; else acc += term;
    }
    for (std::size_t k = 1; k <= j; ++k) {
        Int term = binomial(i - k - 1, i - j - 1) * spec.b[k];
        if ((i - k) % 2 != 0) acc -= term; else acc += term;
    }
    return acc;
}

RowSums row_sums_direct(const Triangle& t) {
    RowSums sums;
    sums.per_row.reserve(t.n());
    sums.total = 0;
    for (const std::vector<Int>& row : t.rows) {
        Int s = 0;
        for (const Int& cell : row) s += cell;
        sums.total += s;
        sums.per_row.push_back(std::move(s));
    }
    return sums;
}

Int row_sum_closed(const BoundarySpec& spec, std::size_t i) {
    spec.validate();
    if (i >= spec.n()) throw InputError("row index out of range");
    if (i == 0) return spec.a[0];
    if (i == 1) return spec.a[1] + spec.b[1];
    Int s = spec.a[i] + spec.b[i];
    for (std::size_t k = 1; k < i; ++k)
        s -= neg2_pow(static_cast<unsigned long>(i - k - 1)) * (spec.a[k] + spec.b[k]);
    return s;
}

Int total_sum_closed(const BoundarySpec& spec) {
    spec.validate();
    const std::size_t n = spec.n();
    if (n == 1) return spec.a[0];
    if (n == 2) return spec.a[0] + spec.a[1] + spec.b[1];
    const std::size_t last = n - 1;
    Int sigma = 0;
    for (std::size_t k = 1; k < last; ++k)
        sigma += (Int(2) + neg2_pow(static_cast<unsigned long>(last - k))) *
                 (spec.a[k] + spec.b[k]);
    if (!mpz_divisible_ui_p(sigma.get_mpz_t(), 3))
        throw InputError("internal: total-sum weight sum not divisible by 3");
    Int third;
    mpz_divexact_ui(third.get_mpz_t(), sigma.get_mpz_t(), 3);
    return spec.a[0] + spec.a[last] + spec.b[last] + third;
}

Int row_sum_step(const Int& s_prev, const Int& a_i, const Int& b_i,
                 const Int& a_prev, const Int& b_prev) {
    return a_i + b_i + a_prev + b_prev - 2 * s_prev;
}

}  // namespace zst
