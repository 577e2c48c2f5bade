#include "zst/special.hpp"

#include <algorithm>
#include <cstddef>

namespace zst {

namespace {

void check_idempotent_a0(int a0) {
    if (a0 != 0 && a0 != 1) throw InputError("idempotent builds need a0 in {0, 1}");
}

void check_involutory_a0(int a0) {
    if (a0 != 1 && a0 != -1) throw InputError("involutory builds need a0 in {+1, -1}");
}

// Interior cells (j = 1..prev.size()-1) of the row following `prev`.
std::vector<Int> interior_below(const std::vector<Int>& prev) {
    std::vector<Int> cells(prev.size() + 1);  // cells[0] and back() stay unset
    for (std::size_t j = 1; j < prev.size(); ++j) cells[j] = -(prev[j - 1] + prev[j]);
    return cells;
}

// sum_{k=1}^{2m-1} t(2m,k) a_k with the row-2m interior derived on the fly.
Int even_row_weighted_sum(const std::vector<std::vector<Int>>& rows, std::size_t m) {
    const std::vector<Int> row2m = interior_below(rows[2 * m - 1]);
    Int acc = 0;
    for (std::size_t k = 1; k < 2 * m; ++k)
        mpz_addmul(acc.get_mpz_t(), row2m[k].get_mpz_t(), rows[k][0].get_mpz_t());
    return acc;
}

}  // namespace

std::vector<Int> idempotent_diagonal(int a0, std::size_t n) {
    check_idempotent_a0(a0);
    std::vector<Int> b;
    b.reserve(n);
    for (std::size_t i = 0; i < n; ++i) b.emplace_back((i + static_cast<std::size_t>(a0)) % 2);
    return b;
}

std::vector<Int> involutory_diagonal(int a0, std::size_t n) {
    check_involutory_a0(a0);
    std::vector<Int> b;
    b.reserve(n);
    for (std::size_t i = 0; i < n; ++i) b.emplace_back(i % 2 == 0 ? a0 : -a0);
    return b;
}

Int idempotent_next_even(const std::vector<std::vector<Int>>& rows, int a0, std::size_t m) {
    check_idempotent_a0(a0);
    if (m < 1 || rows.size() < 2 * m)
        throw InputError("idempotent_next_even needs complete rows 0..2m-1");
    if (a0 == 0) return even_row_weighted_sum(rows, m);
    // a0 == 1: a_{2m} = sum_{k=0}^{2m-2} t(2m-1,k) a_{k+1}
    Int acc = 0;
    for (std::size_t k = 0; k + 1 < 2 * m; ++k)
        mpz_addmul(acc.get_mpz_t(), rows[2 * m - 1][k].get_mpz_t(), rows[k + 1][0].get_mpz_t());
    return acc;
}

ParityNeed required_odd_parity(const std::vector<std::vector<Int>>& rows, int a0, std::size_t m) {
    check_involutory_a0(a0);
    if (m < 1) throw InputError("required_odd_parity needs m >= 1");
    if (m == 1) return ParityNeed::Any;
    if (rows.size() < 2 * m - 1)
        throw InputError("required_odd_parity needs complete rows 0..2m-2");
    // Everything below is independent of the yet-unchosen a_{2m-1}: the
    // interior of row 2m-1 hangs off row 2m-2, and cells t(2m,k) for
    // k = 2..2m-2 hang off that interior.
    const std::vector<Int> row_odd = interior_below(rows[2 * m - 2]);  // row 2m-1, j>=1
    Int acc = rows[1][0] * row_odd[1];                                 // a_1 t(2m-1,1)
    for (std::size_t k = 2; k + 1 < 2 * m; ++k) {
        Int cell = -(row_odd[k - 1] + row_odd[k]);  // t(2m,k)
        mpz_submul(acc.get_mpz_t(), cell.get_mpz_t(), rows[k][0].get_mpz_t());
    }
    return is_even(acc) ? ParityNeed::Even : ParityNeed::Odd;
}

Int involutory_next_even(const std::vector<std::vector<Int>>& rows, int a0, std::size_t m) {
    check_involutory_a0(a0);
    if (m < 1 || rows.size() < 2 * m)
        throw InputError("involutory_next_even needs complete rows 0..2m-1");
    Int sum = even_row_weighted_sum(rows, m);
    if (!is_even(sum)) {
        std::vector<std::vector<Int>> prefix(rows.begin(), rows.begin() + (2 * m - 1));
        throw ParityError(m, required_odd_parity(prefix, a0, m), std::move(sum));
    }
    Int half = half_exact(sum);
    return a0 == 1 ? Int(-half) : half;
}

namespace {

// Shared incremental assembly: interiors by the zero-sum rule, right edge
// from the diagonal sequence, odd left edges from the request, even left
// edges from the theorem solve.
template <typename SolveEven, typename PickOdd>
Triangle build_rows(std::size_t n, const std::vector<Int>& diag, PickOdd pick_odd,
                    SolveEven solve_even) {
    Triangle t;
    t.rows.resize(n);
    t.rows[0] = {diag[0]};
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<Int> row = interior_below(t.rows[r - 1]);
        row[r] = diag[r];
        row[0] = (r % 2 == 1) ? pick_odd(t.rows, (r - 1) / 2) : solve_even(t.rows, r / 2);
        t.rows[r] = std::move(row);
    }
    return t;
}

}  // namespace

Triangle build_idempotent(const SpecialBuildRequest& req) {
    if (req.kind != BuildKind::Idempotent)
        throw InputError("build_idempotent called with a non-idempotent request");
    check_idempotent_a0(req.a0);
    if (req.n < 1) throw InputError("row count must be at least 1");
    const std::size_t needed = req.n / 2;
    if (req.odd_entries.size() < needed)
        throw InputError("need " + std::to_string(needed) + " odd-indexed entries, got " +
                         std::to_string(req.odd_entries.size()));
    const std::vector<Int> diag = idempotent_diagonal(req.a0, req.n);
    return build_rows(
        req.n, diag,
        [&](const std::vector<std::vector<Int>>&, std::size_t idx) {
            return req.odd_entries[idx];
        },
        [&](const std::vector<std::vector<Int>>& rows, std::size_t m) {
            return idempotent_next_even(rows, req.a0, m);
        });
}

InvolutoryBuild build_involutory(const SpecialBuildRequest& req) {
    if (req.kind != BuildKind::Involutory)
        throw InputError("build_involutory called with a non-involutory request");
    check_involutory_a0(req.a0);
    if (req.n < 1) throw InputError("row count must be at least 1");
    const std::size_t needed = req.n / 2;
    const bool autofix = req.parity_mode == ParityMode::AutoFix;
    if (!autofix && req.odd_entries.size() < needed)
        throw InputError("need " + std::to_string(needed) + " odd-indexed entries, got " +
                         std::to_string(req.odd_entries.size()));

    InvolutoryBuild result;
    result.odds_used.assign(req.odd_entries.begin(),
                            req.odd_entries.begin() +
                                static_cast<std::ptrdiff_t>(
                                    std::min(req.odd_entries.size(), needed)));
    result.odds_used.resize(needed, Int(0));  // AutoFix zero-fill (no-op in strict)

    const std::vector<Int> diag = involutory_diagonal(req.a0, req.n);
    result.triangle = build_rows(
        req.n, diag,
        [&](const std::vector<std::vector<Int>>& rows, std::size_t idx) -> Int {
            const std::size_t r = 2 * idx + 1;
            if (autofix && r + 1 < req.n) {
                // a_{r+1} will be solved next; repair parity now if needed.
                ParityNeed need = required_odd_parity(rows, req.a0, (r + 1) / 2);
                if (need != ParityNeed::Any) {
                    const bool want_even = need == ParityNeed::Even;
                    if (is_even(result.odds_used[idx]) != want_even) {
                        result.odds_used[idx] += 1;
                        result.adjusted.push_back(idx);
                    }
                }
            }
            return result.odds_used[idx];
        },
        [&](const std::vector<std::vector<Int>>& rows, std::size_t m) {
            return involutory_next_even(rows, req.a0, m);
        });
    return result;
}

}  // namespace zst
