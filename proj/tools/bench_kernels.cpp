// Benchmarks the threaded kernels against their serial references:
// triangular matrix product, triangle generation, and the squared-matrix
// recurrence versus direct multiplication.

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <random>

#include "zst/boundary.hpp"
#include "zst/matrix.hpp"
#include "zst/products.hpp"
#include "zst/triangle.hpp"
#include "zst/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_best_ms(std::size_t reps, F&& f) {
    double best = 1e300;
    for (std::size_t r = 0; r < reps; ++r) {
        auto start = Clock::now();
        f();
        std::chrono::duration<double, std::milli> ms = Clock::now() - start;
        if (ms.count() < best) best = ms.count();
    }
    return best;
}

zst::LowerTriangularMatrix random_lower(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> dist(-9, 9);
    zst::LowerTriangularMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) m.ref(i, j) = dist(rng);
    return m;
}

zst::BoundarySpec random_spec(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> dist(-9, 9);
    zst::BoundarySpec spec;
    spec.a.resize(n);
    spec.b.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        spec.a[i] = dist(rng);
        spec.b[i] = dist(rng);
    }
    spec.b[0] = spec.a[0];
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs threaded kernel benchmark"};
    std::size_t dim = 256;
    std::size_t rows = 1500;
    std::size_t reps = 3;
    app.add_option("--dim", dim, "matrix dimension for the product benchmarks");
    app.add_option("--rows", rows, "row count for the generation benchmark");
    app.add_option("--reps", reps, "repetitions, best time wins");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled, threaded kernels fall back to serial\n");
#endif

    std::mt19937_64 rng(20240229);

    const zst::LowerTriangularMatrix a = random_lower(rng, dim);
    const zst::LowerTriangularMatrix b = random_lower(rng, dim);
    zst::LowerTriangularMatrix serial_product, parallel_product;
    double serial_ms =
        time_best_ms(reps, [&] { serial_product = zst::mat_mul_serial(a, b); });
    double parallel_ms =
        time_best_ms(reps, [&] { parallel_product = zst::mat_mul_parallel(a, b); });
    std::printf("mat_mul        n=%-5zu serial %9.2f ms   threaded %9.2f ms   x%.2f   %s\n",
                dim, serial_ms, parallel_ms, serial_ms / parallel_ms,
                serial_product == parallel_product ? "identical" : "MISMATCH");

    const zst::BoundarySpec spec = random_spec(rng, rows);
    zst::Triangle serial_triangle, parallel_triangle;
    double gen_serial_ms =
        time_best_ms(reps, [&] { serial_triangle = zst::generate_triangle_serial(spec); });
    double gen_parallel_ms =
        time_best_ms(reps, [&] { parallel_triangle = zst::generate_triangle(spec); });
    std::printf("generate       n=%-5zu serial %9.2f ms   threaded %9.2f ms   x%.2f   %s\n",
                rows, gen_serial_ms, gen_parallel_ms, gen_serial_ms / gen_parallel_ms,
                serial_triangle == parallel_triangle ? "identical" : "MISMATCH");

    const zst::BoundarySpec sq_spec = random_spec(rng, dim);
    const zst::Triangle sq_triangle = zst::generate_triangle(sq_spec);
    const zst::LowerTriangularMatrix t = zst::to_matrix(sq_triangle);
    zst::LowerTriangularMatrix direct_square, recurrence_square;
    double direct_ms = time_best_ms(reps, [&] { direct_square = zst::mat_mul(t, t); });
    double rec_ms = time_best_ms(
        reps, [&] { recurrence_square = zst::squared_via_recurrence(sq_triangle, sq_spec); });
    std::printf("T^2            n=%-5zu product %8.2f ms   recurrence %6.2f ms   x%.2f   %s\n",
                dim, direct_ms, rec_ms, direct_ms / rec_ms,
                direct_square == recurrence_square ? "identical" : "MISMATCH");
    return 0;
}
