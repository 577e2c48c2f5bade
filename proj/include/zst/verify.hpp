#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zst/boundary.hpp"
#include "zst/int.hpp"
#include "zst/matrix.hpp"
#include "zst/triangle.hpp"

namespace zst {

enum class PropertyKind { Idempotent, Involutory, NilpotentIndex2, UnipotentIndex2, JordanProduct };

std::string to_string(PropertyKind p);
std::optional<PropertyKind> property_from_string(std::string_view name);

struct CellMismatch {
    std::size_t row = 0;
    std::size_t col = 0;
    Int expected;
    Int actual;
};

struct IdentityCheck {
    std::string name;
    bool pass = true;
};

struct VerificationReport {
    PropertyKind property = PropertyKind::Idempotent;
    bool pass = false;
    std::optional<CellMismatch> first_failure;
    std::vector<IdentityCheck> auxiliary;  // per-index boundary identities
    bool degenerate = false;               // e.g. identity passed the unipotent check
};

// Exact triangular product (the sum runs k = j..i). The ground truth behind
// every theorem check here. Dispatches to the threaded kernel for large n;
// both kernels produce bit-identical results.
LowerTriangularMatrix mat_mul(const LowerTriangularMatrix& a, const LowerTriangularMatrix& b);
LowerTriangularMatrix mat_mul_serial(const LowerTriangularMatrix& a, const LowerTriangularMatrix& b);
LowerTriangularMatrix mat_mul_parallel(const LowerTriangularMatrix& a, const LowerTriangularMatrix& b);

// pass iff M*M == M.
VerificationReport check_idempotent(const LowerTriangularMatrix& m);

// pass iff M*M == I.
VerificationReport check_involutory(const LowerTriangularMatrix& m);

// pass iff M is strictly lower and M*M == 0; the zero matrix passes with
// degenerate set (its index is 1, not 2).
VerificationReport check_nilpotent_index2(const LowerTriangularMatrix& m);

// pass iff the diagonal is all ones and (M - I)^2 == 0; the identity passes
// with degenerate set.
VerificationReport check_unipotent_index2(const LowerTriangularMatrix& m);

// S_D * S_L == I + B_L.
VerificationReport check_jordan_product(const LowerTriangularMatrix& sd,
                                        const LowerTriangularMatrix& sl);

// Smallest k <= max_k with M^k == 0 (M^0 = I), or nullopt when there is
// none. Any nonzero diagonal entry short-circuits to nullopt. The zero
// matrix has index 1.
std::optional<std::size_t> nilpotency_index(const LowerTriangularMatrix& m, std::size_t max_k);
std::optional<std::size_t> nilpotency_index(const LowerTriangularMatrix& m);  // max_k = n

// Matrix-level check for `claimed` plus, for Idempotent/Involutory, the
// per-index boundary-product identities
//   idempotent: s0(i) = a_i,  s1(i) = a0 (a_i + a_{i+1}) - a_i,  sm1(i) = 0
//   involutory: s0(0) = 1, s0(i) = 0,  s1(i) = a0 (a_i + a_{i+1}),
//               sm1(i) = (-1)^i
// pass requires both layers.
VerificationReport full_report(const Triangle& t, const BoundarySpec& spec, PropertyKind claimed);

}  // namespace zst
