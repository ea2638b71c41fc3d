// serial vs OpenMP timings for the three parallel kernels
#include <chrono>
#include <cstdio>

#include "teachdim/bounds.hpp"
#include "teachdim/explore.hpp"
#include "teachdim/measures.hpp"
#include "teachdim/parallel.hpp"

using namespace teachdim;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

template <class F> double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        Timer t;
        f();
        double ms = t.ms();
        if (ms < best) best = ms;
    }
    return best;
}

int main() {
    printf("%-28s %10s %10s %8s\n", "kernel", "serial ms", "parallel", "speedup");

    {
        ConceptClass C = random_class(12, 250, 99);
        double ts = time_best_of(3, [&] { td_spectrum_serial(C); });
        double tp = time_best_of(3, [&] { td_spectrum(C); });
        printf("%-28s %10.2f %10.2f %8.2fx\n", "td_spectrum n=12 N=250", ts, tp, ts / tp);
        if (td_spectrum(C) != td_spectrum_serial(C)) {
            printf("MISMATCH in td_spectrum\n");
            return 1;
        }
    }
    {
        ConceptClass C = random_class(18, 400, 7);
        double ts = time_best_of(3, [&] { find_min_restriction_serial(C, 9); });
        double tp = time_best_of(3, [&] { find_min_restriction(C, 9); });
        printf("%-28s %10.2f %10.2f %8.2fx\n", "find_min_restriction k=9", ts, tp, ts / tp);
        auto a = find_min_restriction(C, 9);
        auto b = find_min_restriction_serial(C, 9);
        if (a.Y != b.Y || !(a.b == b.b) || a.size != b.size) {
            printf("MISMATCH in find_min_restriction\n");
            return 1;
        }
    }
    {
        double ts = time_best_of(1, [&] { rtd_vcd_experiment_serial(10, 100, 40, 3); });
        double tp = time_best_of(1, [&] { rtd_vcd_experiment(10, 100, 40, 3); });
        printf("%-28s %10.2f %10.2f %8.2fx\n", "experiment n=10 N=100 t=40", ts, tp, ts / tp);
    }
    return 0;
}
