// Serial vs parallel timings of the exact kernels, plus a result check.
//
//   kres_bench [--reps N]

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>

#include "kres/multiplicity.hpp"
#include "kres/resultant.hpp"

using namespace kres;

namespace {

double best_of(int reps, const std::function<void()>& body) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        body();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    return best;
}

void report(const std::string& name, double serial, double parallel, bool same) {
    std::cout << std::left << std::setw(34) << name << std::right << std::fixed << std::setprecision(4) << std::setw(10)
              << serial << std::setw(10) << parallel << std::setw(9) << std::setprecision(2) << serial / parallel << "x"
              << (same ? "" : "  MISMATCH") << '\n';
}

ExactMatrix<IntegerRing> random_matrix(std::mt19937_64& rng, std::size_t n) {
    ExactMatrix<IntegerRing> a(IntegerRing{}, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = Integer(draw_uniform(rng, -99, 99));
    }
    return a;
}

IntSequence random_sequence(std::mt19937_64& rng, const ModuleSpec& m, const std::vector<MultiDegree>& degs) {
    IntSequence f(IntegerRing{}, m.shape());
    for (const auto& d : degs) {
        MPoly<IntegerRing> g(IntegerRing{}, m.shape());
        for (const auto& mono : slice_basis(m, d).monomials) g.add_term(mono, Integer(draw_uniform(rng, -9, 9)));
        f.push_back(g, d);
    }
    return f;
}

}  // namespace

int main(int argc, char** argv) {
    int reps = 3;
    if (argc == 3 && std::string(argv[1]) == "--reps") reps = std::max(1, std::atoi(argv[2]));
    std::mt19937_64 rng(2718);
    #ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    std::cout << "threads " << threads << ", best of " << reps << "\n";
    std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(10) << "serial" << std::setw(10)
              << "parallel" << std::setw(10) << "speedup" << '\n';
    bool all_same = true;

    for (std::size_t n : {40, 80}) {
        auto a = random_matrix(rng, n);
        Integer ds, dp;
        const double ts = best_of(reps, [&] { ds = bareiss_det(a, Exec::serial); });
        const double tp = best_of(reps, [&] { dp = bareiss_det(a, Exec::parallel); });
        all_same = all_same && ds == dp;
        report("bareiss_det " + std::to_string(n) + "x" + std::to_string(n), ts, tp, ds == dp);
    }

    {
        auto m = ModuleSpec::free_ring(BlockStructure{1, 1});
        std::vector<MultiDegree> degs(3, MultiDegree{2, 2});
        auto f = random_sequence(rng, m, degs);
        const MultiDegree nu{7, 7};
        KoszulSlice<IntegerRing> ss, sp;
        const double ts = best_of(reps, [&] { ss = build_slice(m, f, nu, Exec::serial); });
        const double tp = best_of(reps, [&] { sp = build_slice(m, f, nu, Exec::parallel); });
        const bool same = ss.differentials == sp.differentials;
        all_same = all_same && same;
        report("build_slice (2,2)^3 at (7,7)", ts, tp, same);

        CayleyResult<IntegerRing> cs, cp;
        const double cts = best_of(reps, [&] { cs = cayley_det(ss, Exec::serial); });
        const double ctp = best_of(reps, [&] { cp = cayley_det(sp, Exec::parallel); });
        const bool csame = cs.value == cp.value;
        all_same = all_same && csame;
        report("cayley_det (2,2)^3 at (7,7)", cts, ctp, csame);
    }

    {
        auto m = ModuleSpec::free_ring(BlockStructure{1, 1});
        std::vector<MultiDegree> degs(3, MultiDegree{1, 1});
        auto f = random_sequence(rng, m, degs);
        auto g = random_direction(m, degs, rng);
        std::vector<Rational> rs, rp;
        const double ts = best_of(reps, [&] { rs = directional_order_serial(m, f, g, 1).coefficients; });
        const double tp = best_of(reps, [&] { rp = directional_order(m, f, g, {1, Exec::parallel, 3}).coefficients; });
        const bool same = rs == rp;
        all_same = all_same && same;
        report("directional_order (1,1)^3", ts, tp, same);
    }
    return all_same ? 0 : 1;
}
