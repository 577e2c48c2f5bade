#pragma once

#include <cstddef>
#include <vector>

#include "zst/errors.hpp"
#include "zst/int.hpp"
#include "zst/triangle.hpp"

namespace zst {

enum class BuildKind { Idempotent, Involutory };
enum class ParityMode { Strict, AutoFix };

// Inputs for the special-triangle builders. Odd-indexed left-edge entries
// a_1, a_3, a_5, ... are free; even-indexed ones are solved. floor(n/2)
// odd entries are consumed; extras are ignored.
struct SpecialBuildRequest {
    BuildKind kind;
    int a0;  // Idempotent: 0 or 1; Involutory: +1 or -1
    std::vector<Int> odd_entries;
    std::size_t n;
    ParityMode parity_mode = ParityMode::Strict;  // Involutory only
};

// b_i = (i + a0) mod 2: the alternating 0/1 diagonal.
std::vector<Int> idempotent_diagonal(int a0, std::size_t n);

// b_i = (-1)^i a0: the alternating +-1 diagonal.
std::vector<Int> involutory_diagonal(int a0, std::size_t n);

// Solves the dependent even-indexed edge entry a_{2m} given complete rows
// 0..2m-1 (the interior of row 2m is derived internally where needed):
//   a0 == 0:  a_{2m} = sum_{k=1}^{2m-1} t(2m,k) a_k
//   a0 == 1:  a_{2m} = sum_{k=0}^{2m-2} t(2m-1,k) a_{k+1}
// No division is involved, so the result is always an integer.
Int idempotent_next_even(const std::vector<std::vector<Int>>& rows, int a0, std::size_t m);

// a_{2m} = -(a0/2) sum_{k=1}^{2m-1} t(2m,k) a_k given rows 0..2m-1.
// Throws ParityError when the sum is odd.
Int involutory_next_even(const std::vector<std::vector<Int>>& rows, int a0, std::size_t m);

// Parity a_{2m-1} must have for the involutory solve of a_{2m} to stay
// integral, decided from rows 0..2m-2 before a_{2m-1} is chosen: it must
// match the parity of a_1 t(2m-1,1) - sum_{k=2}^{2m-2} t(2m,k) a_k.
// m == 1 is unconstrained (a_1 (a0 a_1 - 1) is always even).
ParityNeed required_odd_parity(const std::vector<std::vector<Int>>& rows, int a0, std::size_t m);

// Theorem-driven builders. The resulting matrix M satisfies M*M == M
// (idempotent) or M*M == I (involutory), exactly.
Triangle build_idempotent(const SpecialBuildRequest& req);

struct InvolutoryBuild {
    Triangle triangle;
    std::vector<Int> odds_used;            // actual a_1, a_3, ... after any repair
    std::vector<std::size_t> adjusted;     // positions in odds_used that were bumped
};

// Strict mode uses the requested odd entries verbatim and propagates
// ParityError; AutoFix bumps a violating odd entry by +1 (and zero-fills
// missing ones) before each even solve.
InvolutoryBuild build_involutory(const SpecialBuildRequest& req);

}  // namespace zst
