// Times the norm-determinant pipeline (matrix assembly + valuation-pivoted
// elimination) with the OpenMP kernels against the serial reference.

#include <chrono>
#include <cstdio>
#include <random>

#include "ptower/norm.hpp"

using namespace ptower;

namespace {

template <class F>
double time_best_of(unsigned reps, F&& fn) {
    double best = 1e300;
    for (unsigned i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

void bench_recipe(unsigned long p, unsigned reps) {
    const UniformizerRecipe recipe = build_theorem2(p, 8);
    const TowerRing ring(p, 2, 1, 8);
    TowerElement num = ring.zero();
    for (const auto& t : recipe.terms) num = num + ring.monomial(t.pi_pow, t.theta_pow, t.coeff);

    NormOptions serial;
    serial.parallel = false;
    NormOptions parallel;
    parallel.parallel = true;

    long v_serial = 0, v_parallel = 0;
    const double ts = time_best_of(reps, [&] { v_serial = norm_valuation_report(num, serial).valuation; });
    const double tp = time_best_of(reps, [&] { v_parallel = norm_valuation_report(num, parallel).valuation; });
    if (v_serial != v_parallel) {
        std::printf("MISMATCH at p=%lu: serial V=%ld parallel V=%ld\n", p, v_serial, v_parallel);
        return;
    }
    std::printf("norm p=%-2lu  D=%-5lu V=%-4ld  serial %8.3f ms  openmp %8.3f ms  speedup %.2fx\n",
                p, ring.degree(), v_serial, ts * 1e3, tp * 1e3, ts / tp);
}

void bench_random(unsigned long n, unsigned long p, unsigned reps) {
    std::mt19937_64 rng(12345 + n);
    std::vector<mpz_class> entries(n * n);
    for (auto& e : entries) {
        // a few p-divisible entries keep the pivoting honest
        const unsigned long v = rng() % 1000;
        e = mpz_class(static_cast<unsigned long>(v)) * (v % 7 == 0 ? static_cast<long>(p) : 1L);
    }
    detail::ElimOutcome s, q;
    const double ts = time_best_of(
        reps, [&] { s = detail::eliminate_ord(entries, n, p, 8, 0, false, false); });
    const double tp = time_best_of(
        reps, [&] { q = detail::eliminate_ord(entries, n, p, 8, 0, true, false); });
    std::printf("rand n=%-4lu p=%-2lu ord=%-4ld  serial %8.3f ms  openmp %8.3f ms  speedup %.2fx\n",
                n, p, s.ord, ts * 1e3, tp * 1e3, ts / tp);
}

}  // namespace

int main() {
    std::printf("-- elimination / norm pipeline, serial reference vs OpenMP kernels --\n");
    bench_recipe(3, 5);
    bench_recipe(5, 5);
    bench_recipe(7, 3);
    bench_random(128, 5, 3);
    bench_random(256, 5, 3);
    bench_random(384, 13, 2);
    return 0;
}
