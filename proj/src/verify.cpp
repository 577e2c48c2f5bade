#include "zst/verify.hpp"

#include <utility>

#include "zst/errors.hpp"
#include "zst/products.hpp"

namespace zst {

std::string to_string(PropertyKind p) {
    switch (p) {
        case PropertyKind::Idempotent: return "idempotent";
        case PropertyKind::Involutory: return "involutory";
        case PropertyKind::NilpotentIndex2: return "nilpotent2";
        case PropertyKind::UnipotentIndex2: return "unipotent2";
        case PropertyKind::JordanProduct: return "jordan-product";
    }
    return "idempotent";
}

std::optional<PropertyKind> property_from_string(std::string_view name) {
    if (name == "idempotent") return PropertyKind::Idempotent;
    if (name == "involutory") return PropertyKind::Involutory;
    if (name == "nilpotent2") return PropertyKind::NilpotentIndex2;
    if (name == "unipotent2") return PropertyKind::UnipotentIndex2;
    if (name == "jordan-product") return PropertyKind::JordanProduct;
    return std::nullopt;
}

namespace {

constexpr std::size_t kParallelDim = 96;

void require_same_size(const LowerTriangularMatrix& a, const LowerTriangularMatrix& b) {
    if (a.size() != b.size()) throw InputError("matrix dimensions differ");
}

void product_row(const LowerTriangularMatrix& a, const LowerTriangularMatrix& b,
                 LowerTriangularMatrix& c, std::size_t i) {
    for (std::size_t j = 0; j <= i; ++j) {
        Int& acc = c.ref(i, j);
        for (std::size_t k = j; k <= i; ++k)
            mpz_addmul(acc.get_mpz_t(), a.at(i, k).get_mpz_t(), b.at(k, j).get_mpz_t());
    }
}

// First cell (row-major) where `actual` differs from `target`.
std::optional<CellMismatch> first_mismatch(const LowerTriangularMatrix& actual,
                                           const LowerTriangularMatrix& target) {
    for (std::size_t i = 0; i < actual.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (actual.at(i, j) != target.at(i, j))
                return CellMismatch{i, j, target.at(i, j), actual.at(i, j)};
    return std::nullopt;
}

VerificationReport report_against(PropertyKind property, const LowerTriangularMatrix& actual,
                                  const LowerTriangularMatrix& target) {
    VerificationReport r;
    r.property = property;
    r.first_failure = first_mismatch(actual, target);
    r.pass = !r.first_failure.has_value();
    return r;
}

}  // namespace

LowerTriangularMatrix mat_mul_serial(const LowerTriangularMatrix& a,
                                     const LowerTriangularMatrix& b) {
    require_same_size(a, b);
    LowerTriangularMatrix c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) product_row(a, b, c, i);
    return c;
}

LowerTriangularMatrix mat_mul_parallel(const LowerTriangularMatrix& a,
                                       const LowerTriangularMatrix& b) {
    require_same_size(a, b);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.size());
    LowerTriangularMatrix c(a.size());
    // Rows are independent; dynamic schedule balances the triangular row costs.
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        product_row(a, b, c, static_cast<std::size_t>(i));
    return c;
}

LowerTriangularMatrix mat_mul(const LowerTriangularMatrix& a, const LowerTriangularMatrix& b) {
    return a.size() >= kParallelDim ? mat_mul_parallel(a, b) : mat_mul_serial(a, b);
}

VerificationReport check_idempotent(const LowerTriangularMatrix& m) {
    return report_against(PropertyKind::Idempotent, mat_mul(m, m), m);
}

VerificationReport check_involutory(const LowerTriangularMatrix& m) {
    return report_against(PropertyKind::Involutory, mat_mul(m, m),
                          LowerTriangularMatrix::identity(m.size()));
}

VerificationReport check_nilpotent_index2(const LowerTriangularMatrix& m) {
    VerificationReport r = report_against(PropertyKind::NilpotentIndex2, mat_mul(m, m),
                                          LowerTriangularMatrix(m.size()));
    r.degenerate = r.pass && m.is_zero();  // index 1, not 2
    return r;
}

VerificationReport check_unipotent_index2(const LowerTriangularMatrix& m) {
    VerificationReport r;
    r.property = PropertyKind::UnipotentIndex2;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m.at(i, i) != 1) {
            r.first_failure = CellMismatch{i, i, Int(1), m.at(i, i)};
            r.pass = false;
            return r;
        }
    }
    LowerTriangularMatrix nil(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) nil.ref(i, j) = m.at(i, j);
    r.first_failure = first_mismatch(mat_mul(nil, nil), LowerTriangularMatrix(m.size()));
    r.pass = !r.first_failure.has_value();
    r.degenerate = r.pass && nil.is_zero();
    return r;
}

VerificationReport check_jordan_product(const LowerTriangularMatrix& sd,
                                        const LowerTriangularMatrix& sl) {
    require_same_size(sd, sl);
    LowerTriangularMatrix target = LowerTriangularMatrix::identity(sd.size());
    for (std::size_t i = 1; i < sd.size(); ++i) target.ref(i, i - 1) = 1;
    return report_against(PropertyKind::JordanProduct, mat_mul(sd, sl), target);
}

std::optional<std::size_t> nilpotency_index(const LowerTriangularMatrix& m, std::size_t max_k) {
    if (max_k < 1) throw InputError("nilpotency_index needs max_k >= 1");
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m.at(i, i) != 0) return std::nullopt;  // diagonal = eigenvalues
    if (m.is_zero()) return 1;
    LowerTriangularMatrix power = m;
    for (std::size_t k = 2; k <= max_k; ++k) {
        power = mat_mul(power, m);
        if (power.is_zero()) return k;
    }
    return std::nullopt;
}

std::optional<std::size_t> nilpotency_index(const LowerTriangularMatrix& m) {
    return nilpotency_index(m, m.size() > 0 ? m.size() : 1);
}

namespace {

void push_check(VerificationReport& r, std::string name, bool pass, std::size_t index,
                const Int& expected, const Int& actual) {
    r.auxiliary.push_back({std::move(name), pass});
    if (!pass && r.pass) {
        r.pass = false;
        if (!r.first_failure) r.first_failure = CellMismatch{index, 0, expected, actual};
    }
}

void append_idempotent_identities(VerificationReport& r, const ProductVectors& p,
                                  const BoundarySpec& spec) {
    const std::size_t n = spec.n();
    const Int& a0 = spec.a[0];
    for (std::size_t i = 0; i < n; ++i)
        push_check(r, "s0(" + std::to_string(i) + ") == a_" + std::to_string(i),
                   p.s0[i] == spec.a[i], i, spec.a[i], p.s0[i]);
    if (n >= 2) {
        Int base = a0 * spec.a[1];
        push_check(r, "s1(0) == a0*a1", p.s1[0] == base, 0, base, p.s1[0]);
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        Int expect = a0 * (spec.a[i] + spec.a[i + 1]) - spec.a[i];
        push_check(r, "s1(" + std::to_string(i) + ") == a0*(a_i+a_{i+1}) - a_i",
                   p.s1[i] == expect, i, expect, p.s1[i]);
    }
    for (std::size_t i = 1; i < n; ++i)
        push_check(r, "sm1(" + std::to_string(i) + ") == 0", p.sm1[i] == 0, i, Int(0),
                   p.sm1[i]);
}

void append_involutory_identities(VerificationReport& r, const ProductVectors& p,
                                  const BoundarySpec& spec) {
    const std::size_t n = spec.n();
    const Int& a0 = spec.a[0];
    push_check(r, "s0(0) == 1", p.s0[0] == 1, 0, Int(1), p.s0[0]);
    for (std::size_t i = 1; i < n; ++i)
        push_check(r, "s0(" + std::to_string(i) + ") == 0", p.s0[i] == 0, i, Int(0), p.s0[i]);
    if (n >= 2) {
        Int base = a0 * spec.a[1];
        push_check(r, "s1(0) == a0*a1", p.s1[0] == base, 0, base, p.s1[0]);
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        Int expect = a0 * (spec.a[i] + spec.a[i + 1]);
        push_check(r, "s1(" + std::to_string(i) + ") == a0*(a_i+a_{i+1})", p.s1[i] == expect,
                   i, expect, p.s1[i]);
    }
    for (std::size_t i = 1; i < n; ++i) {
        Int expect = i % 2 == 0 ? Int(1) : Int(-1);
        push_check(r, "sm1(" + std::to_string(i) + ") == (-1)^" + std::to_string(i),
                   p.sm1[i] == expect, i, expect, p.sm1[i]);
    }
}

}  // namespace

VerificationReport full_report(const Triangle& t, const BoundarySpec& spec,
                               PropertyKind claimed) {
    spec.validate();
    if (t.n() != spec.n()) throw InputError("triangle and boundary spec sizes differ");
    const LowerTriangularMatrix m = to_matrix(t);
    VerificationReport r;
    switch (claimed) {
        case PropertyKind::Idempotent: r = check_idempotent(m); break;
        case PropertyKind::Involutory: r = check_involutory(m); break;
        case PropertyKind::NilpotentIndex2: return check_nilpotent_index2(m);
        case PropertyKind::UnipotentIndex2: return check_unipotent_index2(m);
        case PropertyKind::JordanProduct:
            throw InputError("jordan-product needs the factor pair, not a triangle");
    }
    const ProductVectors p = products_direct(t, spec);
    if (claimed == PropertyKind::Idempotent)
        append_idempotent_identities(r, p, spec);
    else
        append_involutory_identities(r, p, spec);
    return r;
}

}  // namespace zst
