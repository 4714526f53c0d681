// Benchmark: serial reference kernels against the packed / OpenMP kernels on
// the workloads that dominate real runs (Magnus scans and series products).
// Results must be bit-identical across all paths; the run aborts otherwise.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ccalc/bing.hpp"
#include "ccalc/magnus.hpp"
#include "ccalc/ncpoly.hpp"

using namespace ccalc;

namespace {

double now_ms() {
    using Clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(Clock::now().time_since_epoch()).count();
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
    omp_set_num_threads(n);
#else
    (void)n;
#endif
}

Word random_word(std::mt19937_64& rng, const Alphabet& alpha, int length) {
    std::vector<Letter> ls;
    while (static_cast<int>(ls.size()) < length) {
        const Generator& g = alpha.at(static_cast<std::int32_t>(rng() % alpha.size()) + 1);
        auto sign = static_cast<std::int8_t>(rng() % 2 == 0 ? 1 : -1);
        if (!ls.empty() && ls.back().gen == g && ls.back().sign == -sign) continue;
        ls.push_back({g, sign});
    }
    return reduce(ls);
}

Series magnus_reference(const Word& w, int deg) {
    Series acc = Series::one(deg);
    for (const Letter& l : w.letters())
        acc = series_mul_reference(acc, letter_factor(l.gen.index, l.sign < 0, deg));
    return acc;
}

struct Row {
    const char* name;
    std::size_t terms;
    double ref_ms;
    double serial_ms;
    double parallel_ms;
    bool identical;
};

void print_row(const Row& r) {
    std::printf("%-28s %9zu %12.1f %12.1f %12.1f %9.2fx %s\n", r.name, r.terms, r.ref_ms,
                r.serial_ms, r.parallel_ms,
                r.parallel_ms > 0 ? r.serial_ms / r.parallel_ms : 0.0,
                r.identical ? "ok" : "MISMATCH");
}

Row bench_magnus(const char* name, const Word& w, int deg, int hw_threads) {
    double t0 = now_ms();
    Series ref = magnus_reference(w, deg);
    double t1 = now_ms();
    set_threads(1);
    Series serial = magnus_expand(w, deg);
    double t2 = now_ms();
    set_threads(hw_threads);
    Series parallel = magnus_expand(w, deg);
    double t3 = now_ms();
    return Row{name, parallel.term_count(), t1 - t0, t2 - t1, t3 - t2,
               ref == serial && serial == parallel};
}

Row bench_product(const char* name, const Series& a, const Series& b, int hw_threads) {
    double t0 = now_ms();
    Series ref = series_mul_reference(a, b);
    double t1 = now_ms();
    set_threads(1);
    Series serial = series_mul(a, b);
    double t2 = now_ms();
    set_threads(hw_threads);
    Series parallel = series_mul(a, b);
    double t3 = now_ms();
    return Row{name, parallel.term_count(), t1 - t0, t2 - t1, t3 - t2,
               ref == serial && serial == parallel};
}

} // namespace

int main() {
    const int hw_threads = max_threads();
    std::printf("threads available: %d\n\n", hw_threads);
    std::printf("%-28s %9s %12s %12s %12s %9s %s\n", "workload", "terms", "reference/ms",
                "packed-1t/ms", "packed-Nt/ms", "speedup", "check");

    bool all_ok = true;
    auto run = [&](const Row& r) {
        print_row(r);
        all_ok = all_ok && r.identical;
    };

    std::mt19937_64 rng(6021023);

    // the certificate workload: stage-2 commutator word, 64 letters, 8 variables
    Word cliff2 = flatten(clifford_commutator(StageSpec::make(2)));
    run(bench_magnus("clifford-2 expand D=7", cliff2, 7, hw_threads));
    run(bench_magnus("clifford-2 expand D=8", cliff2, 8, hw_threads));

    // unstructured words have dense supports, the worst case for the scan
    Alphabet a6 = Alphabet::side_free(6);
    run(bench_magnus("random word 60 D=5", random_word(rng, a6, 60), 5, hw_threads));
    run(bench_magnus("random word 120 D=6", random_word(rng, a6, 120), 6, hw_threads));

    // large enough to clear the letter scan's parallel activation floor
    Alphabet a8 = Alphabet::side_free(8);
    run(bench_magnus("random word 160/8v D=6", random_word(rng, a8, 160), 6, hw_threads));

    // pairwise products of mid-sized expansions
    Alphabet a4 = Alphabet::side_free(4);
    Series p = magnus_expand(random_word(rng, a4, 40), 6);
    Series q = magnus_expand(random_word(rng, a4, 40), 6);
    run(bench_product("product 40x40 D=6", p, q, hw_threads));
    Series p2 = magnus_expand(random_word(rng, a6, 80), 5);
    Series q2 = magnus_expand(random_word(rng, a6, 80), 5);
    run(bench_product("product 80x80 D=5", p2, q2, hw_threads));

    if (!all_ok) {
        std::printf("\nkernel outputs disagree\n");
        return 1;
    }
    std::printf("\nall kernels agree bit-for-bit\n");
    return 0;
}
