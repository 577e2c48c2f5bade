#include "zst/products.hpp"

#include "zst/errors.hpp"

namespace zst {

namespace {

void require_match(const Triangle& t, const BoundarySpec& spec) {
    spec.validate();
    if (t.n() != spec.n()) throw InputError("triangle and boundary spec sizes differ");
}

// s1(i) by its definition, sum_{k=0}^{i} t(i,k) a_{k+1}.
Int s1_dot(const Triangle& t, const BoundarySpec& spec, std::size_t i) {
    Int acc = 0;
    for (std::size_t k = 0; k <= i; ++k)
        mpz_addmul(acc.get_mpz_t(), t.rows[i][k].get_mpz_t(), spec.a[k + 1].get_mpz_t());
    return acc;
}

// s0(i) by its definition, sum_{k=0}^{i} t(i,k) a_k.
Int s0_dot(const Triangle& t, const BoundarySpec& spec, std::size_t i) {
    Int acc = 0;
    for (std::size_t k = 0; k <= i; ++k)
        mpz_addmul(acc.get_mpz_t(), t.rows[i][k].get_mpz_t(), spec.a[k].get_mpz_t());
    return acc;
}

}  // namespace

ProductVectors products_direct(const Triangle& t, const BoundarySpec& spec) {
    require_match(t, spec);
    const std::size_t n = t.n();
    ProductVectors p;
    p.s0.reserve(n);
    p.s1.reserve(n > 0 ? n - 1 : 0);
    p.sm1.assign(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) p.s0.push_back(s0_dot(t, spec, i));
    for (std::size_t i = 0; i + 1 < n; ++i) p.s1.push_back(s1_dot(t, spec, i));
    for (std::size_t i = 1; i < n; ++i) {
        Int acc = 0;
        for (std::size_t k = 1; k <= i; ++k)
            mpz_addmul(acc.get_mpz_t(), t.rows[i][k].get_mpz_t(), spec.a[k - 1].get_mpz_t());
        p.sm1[i] = std::move(acc);
    }
    return p;
}

ProductVectors products_recursive(const BoundarySpec& spec, const Triangle& t) {
    require_match(t, spec);
    const std::size_t n = t.n();
    if (n < 2) throw InputError("products_recursive needs at least 2 rows");
    const std::vector<Int>& a = spec.a;
    const std::vector<Int>& b = spec.b;

    ProductVectors p;
    p.s0.assign(n, Int(0));
    p.s1.assign(n - 1, Int(0));
    p.sm1.assign(n, Int(0));

    // Forward s0 chain. The relations leave the s1 interior values free, so
    // the consumed s1(i-1) comes from its dot-product definition.
    p.s0[0] = a[0] * a[0];
    for (std::size_t i = 1; i < n; ++i)
        p.s0[i] = a[0] * (a[i - 1] + a[i]) + a[i] * (b[i - 1] + b[i]) - p.s0[i - 1] -
                  s1_dot(t, spec, i - 1);

    // Forward sm1 chain off the completed s0.
    p.sm1[1] = a[0] * b[1];
    for (std::size_t i = 2; i < n; ++i)
        p.sm1[i] = a[i - 1] * (b[i - 1] + b[i]) - p.sm1[i - 1] - p.s0[i - 1];

    // s1 recovered from the relation that references s0(i+1).
    p.s1[0] = a[0] * a[1];
    for (std::size_t i = 1; i + 1 < n; ++i)
        p.s1[i] = a[0] * (a[i] + a[i + 1]) + a[i + 1] * (b[i] + b[i + 1]) - p.s0[i] -
                  p.s0[i + 1];
    return p;
}

LowerTriangularMatrix squared_via_recurrence(const Triangle& t, const BoundarySpec& spec) {
    require_match(t, spec);
    const std::size_t n = t.n();
    const std::vector<Int>& b = spec.b;
    LowerTriangularMatrix m2(n);
    for (std::size_t i = 0; i < n; ++i) m2.ref(i, i) = b[i] * b[i];
    for (std::size_t i = 1; i < n; ++i) m2.ref(i, 0) = s0_dot(t, spec, i);
    for (std::size_t i = 2; i < n; ++i) {
        const Int bi_sum = b[i - 1] + b[i];
        for (std::size_t j = 1; j < i; ++j)
            m2.ref(i, j) = m2.at(i - 1, j - 1) + t.rows[i][j] * bi_sum -
                           t.rows[i - 1][j - 1] * (b[j - 1] + b[j]);
    }
    return m2;
}

}  // namespace zst
