// Benchmark comparing the serial reference elimination kernels against the
// OpenMP-parallel ones on exact rational matrices, asserting bit-identical
// results.

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <random>

#include "sgr/matrix.hpp"

using namespace sgr;

namespace {

Matrix random_matrix(std::size_t n, std::uint64_t seed) {
    const Field q = Field::rationals();
    Matrix m(q, n, n);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const long long num = static_cast<long long>(rng() % 19) - 9;
            const long long den = 1 + static_cast<long long>(rng() % 4);
            m.at(i, j) = Scalar::from_rat(BigRat(num, den));
        }
    return m;
}

double time_rref(const Matrix& m, bool parallel, std::size_t* rank) {
    const double t0 = omp_get_wtime();
    RrefResult r = parallel ? rref_parallel(m) : rref_serial(m);
    const double t1 = omp_get_wtime();
    *rank = r.rank;
    return t1 - t0;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::size_t> sizes{96, 144, 192};
    if (argc > 1) {
        sizes.clear();
        for (int i = 1; i < argc; ++i) sizes.push_back(std::strtoull(argv[i], nullptr, 10));
    }
    std::printf("threads available: %d\n", omp_get_max_threads());
    std::printf("%8s %12s %12s %9s %6s\n", "n", "serial[s]", "parallel[s]", "speedup", "equal");
    for (std::size_t n : sizes) {
        Matrix m = random_matrix(n, 0x9E3779B97F4A7C15ULL ^ n);
        std::size_t rank_s = 0, rank_p = 0;
        const double ts = time_rref(m, false, &rank_s);
        const double tp = time_rref(m, true, &rank_p);
        const bool equal = rank_s == rank_p && rref_serial(m).m == rref_parallel(m).m;
        std::printf("%8zu %12.4f %12.4f %8.2fx %6s\n", n, ts, tp, ts / tp,
                    equal ? "yes" : "NO");
        if (!equal) return 1;
    }
    return 0;
}
