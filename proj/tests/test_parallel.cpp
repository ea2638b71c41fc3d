#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "teachdim/bounds.hpp"
#include "teachdim/explore.hpp"
#include "teachdim/measures.hpp"
#include "teachdim/parallel.hpp"
#include "teachdim/rng.hpp"

using namespace teachdim;

TEST_CASE("thread cap is settable") {
    int before = parallel::max_threads();
    CHECK(before >= 1);
    parallel::set_max_threads(3);
    CHECK(parallel::max_threads() == 3);
    parallel::set_max_threads(0); // back to the runtime default
    CHECK(parallel::max_threads() >= 1);
}

// every parallel kernel must return bit-identical results at any thread count
TEST_CASE("td spectrum is thread-count invariant") {
    for (uint64_t seed : {1ull, 2ull, 3ull}) {
        ConceptClass C = random_class(11, 180, seed);
        parallel::set_max_threads(1);
        auto sp1 = td_spectrum(C);
        parallel::set_max_threads(4);
        auto sp4 = td_spectrum(C);
        parallel::set_max_threads(0);
        auto sp0 = td_spectrum(C);
        auto ref = td_spectrum_serial(C);
        CHECK(sp1 == ref);
        CHECK(sp4 == ref);
        CHECK(sp0 == ref);
    }
}

TEST_CASE("minimum restriction is thread-count invariant") {
    for (uint64_t seed : {4ull, 5ull}) {
        ConceptClass C = random_class(14, 250, seed);
        for (int k : {2, 5, 9}) {
            MinRestriction ref = find_min_restriction_serial(C, k);
            parallel::set_max_threads(1);
            MinRestriction r1 = find_min_restriction(C, k);
            parallel::set_max_threads(4);
            MinRestriction r4 = find_min_restriction(C, k);
            parallel::set_max_threads(0);
            CHECK(r1.Y == ref.Y);
            CHECK(r1.b == ref.b);
            CHECK(r1.size == ref.size);
            CHECK(r4.Y == ref.Y);
            CHECK(r4.b == ref.b);
            CHECK(r4.size == ref.size);
        }
    }
}

TEST_CASE("experiment stats are thread-count invariant") {
    ExperimentStats ref = rtd_vcd_experiment_serial(9, 60, 24, 31);
    parallel::set_max_threads(1);
    ExperimentStats s1 = rtd_vcd_experiment(9, 60, 24, 31);
    parallel::set_max_threads(4);
    ExperimentStats s4 = rtd_vcd_experiment(9, 60, 24, 31);
    parallel::set_max_threads(0);
    for (const ExperimentStats* s : {&s1, &s4}) {
        CHECK(s->frac_rtd_lt_vcd == ref.frac_rtd_lt_vcd);
        CHECK(s->frac_rtd_eq_vcd == ref.frac_rtd_eq_vcd);
        CHECK(s->frac_rtd_gt_vcd == ref.frac_rtd_gt_vcd);
        CHECK(s->rtd_histogram == ref.rtd_histogram);
        CHECK(s->vcd_histogram == ref.vcd_histogram);
    }
}
