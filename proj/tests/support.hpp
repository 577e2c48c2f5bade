#pragma once

// Shared test helpers: deterministic random boundary specs and the
// independent oracles the implementation is checked against (rational
// involutory construction, printed even-entry polynomials).

#include <gmpxx.h>

#include <cstddef>
#include <random>
#include <vector>

#include "zst/boundary.hpp"
#include "zst/int.hpp"
#include "zst/special.hpp"
#include "zst/triangle.hpp"

namespace zst::test {

using Rat = mpq_class;

inline Int random_int(std::mt19937_64& rng, int lo = -9, int hi = 9) {
    return Int(static_cast<long>(std::uniform_int_distribution<int>(lo, hi)(rng)));
}

inline std::vector<Int> random_values(std::mt19937_64& rng, std::size_t n, int lo = -9,
                                      int hi = 9) {
    std::vector<Int> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(random_int(rng, lo, hi));
    return out;
}

inline BoundarySpec random_spec(std::mt19937_64& rng, std::size_t n) {
    BoundarySpec spec{random_values(rng, n), random_values(rng, n)};
    spec.b[0] = spec.a[0];
    return spec;
}

// Involutory construction carried out over exact rationals with no parity
// gate: interiors by the zero-sum rule, a_{2m} = -(a0/2) sum t(2m,k) a_k.
// Independent of the integer builder; a_{2m} is integral exactly when the
// strict integer build survives step m.
struct RationalTriangle {
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> a;
};

inline RationalTriangle build_involutory_rational(int a0, const std::vector<Int>& odds,
                                                  std::size_t n) {
    RationalTriangle t;
    t.rows.resize(n);
    t.a.resize(n);
    t.rows[0] = {Rat(a0)};
    t.a[0] = Rat(a0);
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<Rat> row(r + 1);
        for (std::size_t j = 1; j < r; ++j) row[j] = -(t.rows[r - 1][j - 1] + t.rows[r - 1][j]);
        row[r] = Rat(r % 2 == 0 ? a0 : -a0);
        if (r % 2 == 1) {
            row[0] = Rat(odds[(r - 1) / 2]);
        } else {
            Rat sum = 0;
            for (std::size_t k = 1; k < r; ++k) sum += row[k] * t.a[k];
            row[0] = Rat(-a0) * sum / 2;
        }
        t.a[r] = row[0];
        t.rows[r] = std::move(row);
    }
    return t;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

// Printed closed forms for the dependent even entries of the idempotent
// triangles, a0 = 1 family.
inline Int idem1_a2(const Int& a1) { return a1 * a1; }
inline Int idem1_a4(const Int& a1, const Int& a3) {
    return (1 - a1) * a1 * a1 * a1 + (2 * a1 - 1) * a3;
}
inline Int idem1_a6(const Int& a1, const Int& a3, const Int& a5) {
    Int a1_2 = a1 * a1, a1_3 = a1_2 * a1, a1_4 = a1_3 * a1, a1_5 = a1_4 * a1, a1_6 = a1_5 * a1;
    return 4 * a1_4 - 5 * a1_5 + 2 * a1_6 + a3 + 7 * a1_2 * a3 + a3 * a3 -
           a1_3 * (4 * a3 + 1) - 2 * a5 + 2 * a1 * (a5 - 2 * a3);
}
inline Int idem1_a8(const Int& a1, const Int& a3, const Int& a5, const Int& a7) {
    Int a1_2 = a1 * a1, a1_3 = a1_2 * a1, a1_4 = a1_3 * a1, a1_5 = a1_4 * a1, a1_6 = a1_5 * a1;
    Int a1_7 = a1_6 * a1, a1_8 = a1_7 * a1;
    return -39 * a1_6 + 22 * a1_7 - 5 * a1_8 + a1_5 * (12 * a3 + 35) -
           a1_4 * (41 * a3 + 16) + a1_3 * (56 * a3 - 4 * a5 + 3) + 5 * a5 +
           a3 * (2 * a5 - 5 * a3 - 3) + a1_2 * (11 * a5 - 2 * a3 * (20 + 3 * a3)) - 3 * a7 +
           a1 * (a3 * (11 * a3 + 16) + 2 * (a7 - 6 * a5));
}

// a0 = 0 family.
inline Int idem0_a2(const Int& a1) { return -a1 * (1 + a1); }
inline Int idem0_a4(const Int& a1, const Int& a3) {
    Int u = 1 + a1;
    return a1 * u * u * u - 2 * u * a3;
}
inline Int idem0_a6(const Int& a1, const Int& a3, const Int& a5) {
    Int a1_2 = a1 * a1, a1_3 = a1_2 * a1, a1_4 = a1_3 * a1, a1_5 = a1_4 * a1, a1_6 = a1_5 * a1;
    return -24 * a1_4 - 11 * a1_5 - 2 * a1_6 - (a3 - 5) * a3 + a1_3 * (4 * a3 - 26) +
           a1_2 * (13 * a3 - 14) + a1 * (14 * a3 - 2 * a5 - 3) - 3 * a5;
}
inline Int idem0_a8(const Int& a1, const Int& a3, const Int& a5, const Int& a7) {
    Int a1_2 = a1 * a1, a1_3 = a1_2 * a1, a1_4 = a1_3 * a1, a1_5 = a1_4 * a1, a1_6 = a1_5 * a1;
    Int a1_7 = a1_6 * a1, a1_8 = a1_7 * a1;
    return 151 * a1_6 + 42 * a1_7 + 5 * a1_8 + a1_4 * (359 - 71 * a3) +
           a1_5 * (301 - 12 * a3) + 12 * a3 * a3 + 14 * a5 - 2 * a3 * (14 + a5) +
           4 * a1_3 * (64 - 42 * a3 + a5) + a1_2 * (101 + a3 * (6 * a3 - 199) + 17 * a5) +
           a1 * (17 + a3 * (17 * a3 - 118) + 26 * a5 - 2 * a7) - 4 * a7;
}

// Printed involutory closed forms (exact rationals).
inline Rat invol_a2(int a0, const Rat& a1) { return a1 * (a0 * a1 - 1) / 2; }
inline Rat invol_a4(int a0, const Rat& a1, const Rat& a3) {
    return (a1 * (2 + 4 * a1 * a1 - Rat(a0) * (5 * a1 + a1 * a1 * a1 - 8 * a3)) - 12 * a3) / 8;
}
inline Rat invol_a6(int a0, const Rat& a1, const Rat& a3, const Rat& a5) {
    Rat a1_2 = a1 * a1, a1_3 = a1_2 * a1, a1_4 = a1_3 * a1, a1_5 = a1_4 * a1, a1_6 = a1_5 * a1;
    return (-8 * a1 - 38 * a1_3 - 8 * a1_5 + 40 * a3 + 40 * a1_2 * a3 - 40 * a5 +
            Rat(a0) * (28 * a1_2 + 25 * a1_4 + a1_6 - 8 * a1_3 * a3 + 8 * a3 * a3 +
                       a1 * (16 * a5 - 68 * a3))) /
           16;
}

}  // namespace zst::test
