#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "teachdim/concepts.hpp"

namespace teachdim {

struct ExperimentStats {
    int n = 0;
    int N = 0;
    int trials = 0;
    uint64_t seed = 0;
    double frac_rtd_lt_vcd = 0;
    double frac_rtd_eq_vcd = 0;
    double frac_rtd_gt_vcd = 0;
    std::map<int, int> rtd_histogram;
    std::map<int, int> vcd_histogram;
};

struct SearchResult {
    std::vector<Concept> best_class;
    int n = 0;
    int rtd = 0;
    int vcd = 0;
    double ratio = 0;
    uint64_t evaluations = 0;
    uint64_t seed = 0;
};

struct CorpusCheck {
    std::string what;
    bool pass = true;
    std::string detail;
};

struct CorpusItem {
    std::string name;
    bool skipped = false;
    std::string notice;
    std::vector<CorpusCheck> checks;
};

struct CorpusReport {
    std::vector<CorpusItem> items;
    std::vector<CorpusItem> pair_items;
    bool all_pass = true;
};

// N distinct concepts over [n], uniform without replacement, deterministic per
// seed (see the generator contract in rng.hpp)
ConceptClass random_class(int n, int N, uint64_t seed);

// exact RTD and VCD per trial; trial i draws from substream(seed, i), so the
// stats are identical for every thread count. Guidance limits n <= 14, N <= 300.
ExperimentStats rtd_vcd_experiment(int n, int N, int trials, uint64_t seed);
ExperimentStats rtd_vcd_experiment_serial(int n, int N, int trials, uint64_t seed);

// seeded plateau walk with restarts over classes of fixed size; moves swap a
// uniform member for an outsider (half single-bit mutations, half uniform
// draws). A move is accepted when (feasibility, RTD) strictly improves, and
// with probability 1/2 on ties, so the walk drifts across equal-RTD plateaus
// instead of freezing on them. budget_secs caps wall time; stop_rtd > 0 ends
// the search early once a certified class reaches it.
SearchResult extremal_search(int n, int size, int vcd_cap, double budget_secs, uint64_t seed,
                             int stop_rtd = 0);

// |C| equals the Sauer bound for its own VC dimension
bool is_maximal_class(const ConceptClass& C);

// closed under coordinatewise AND
bool is_intersection_closed(const ConceptClass& C);

// per-class checks: the quadratic RTD bound, RTD = VCD on maximal classes,
// RTD <= VCD on intersection-closed classes, Sauer pattern counts; with
// pairs, product laws on every unordered pair
CorpusReport verify_corpus(const std::vector<ConceptClass>& classes,
                           const std::vector<std::string>& names, bool pairs);

} // namespace teachdim
