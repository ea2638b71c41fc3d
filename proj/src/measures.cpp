#include "teachdim/measures.hpp"

#include <algorithm>

#include "teachdim/parallel.hpp"

namespace teachdim {

bool is_shattered(const ConceptClass& C, InstanceSet A) {
    if (A & ~C.full_mask()) throw input_error("set has coordinates beyond the instance space");
    size_t need = size_t(1) << popcount(A);
    if (C.size() < need) return false;
    return project_count_exceeds(C, A, need - 1);
}

int vc_dimension(const ConceptClass& C) {
    if (C.empty()) throw domain_error("vc_dimension of the empty class");
    int n = C.n();
    int d = 0;
    for (int s = 1; s <= n && (size_t(1) << s) <= C.size(); ++s) {
        bool found = false;
        for (uint32_t A = first_combination(s); A; A = next_combination(A, n)) {
            if (is_shattered(C, A)) {
                found = true;
                break;
            }
        }
        if (!found) break; // shattering is downward closed, no larger set can work
        d = s;
    }
    return d;
}

PatternProfile pattern_profile(const ConceptClass& C, int x_max) {
    if (x_max < 1) throw parameter_error("profile size must be >= 1");
    if (C.empty()) throw domain_error("pattern_profile of the empty class");
    int n = C.n();
    PatternProfile prof;
    for (int x = 1; x <= std::min(x_max, n); ++x) {
        size_t best = 0;
        for (uint32_t A = first_combination(x); A; A = next_combination(A, n)) {
            size_t cnt = project_count(C, A);
            if (cnt > best) best = cnt;
            if (best == std::min(C.size(), size_t(1) << x)) break;
        }
        prof.max_patterns[x] = best;
    }
    return prof;
}

bool is_xy_class(const ConceptClass& C, int x, size_t y) {
    if (x < 1 || y < 1) throw parameter_error("x and y must be positive");
    if (C.empty()) throw domain_error("is_xy_class of the empty class");
    int n = C.n();
    int s = std::min(x, n);
    for (uint32_t A = first_combination(s); A; A = next_combination(A, n))
        if (project_count_exceeds(C, A, y)) return false;
    return true;
}

namespace {

// ---- exact minimum hitting set over difference masks ----

// keep only inclusion-minimal masks; hitting those hits everything
std::vector<uint32_t> minimal_masks(std::vector<uint32_t> masks) {
    std::sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
        return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
    });
    std::vector<uint32_t> kept;
    for (uint32_t m : masks) {
        bool dominated = false;
        for (uint32_t k : kept)
            if ((k & m) == k) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(m);
    }
    return kept;
}

// count of pairwise disjoint masks picked greedily in order: a lower bound on
// the hitting-set size
int disjoint_lower_bound(const std::vector<uint32_t>& masks) {
    uint32_t used = 0;
    int cnt = 0;
    for (uint32_t m : masks)
        if (!(m & used)) {
            used |= m;
            ++cnt;
        }
    return cnt;
}

struct HitSearch {
    const std::vector<uint32_t>& all;
    int best_size;
    uint32_t best_set;

    void dfs(uint32_t chosen, int depth, const std::vector<uint32_t>& remaining) {
        if (remaining.empty()) {
            if (depth < best_size) {
                best_size = depth;
                best_set = chosen;
            }
            return;
        }
        if (depth + disjoint_lower_bound(remaining) >= best_size) return;
        // branch on the elements of a smallest uncovered mask
        uint32_t pick = remaining[0];
        for (uint32_t m : remaining)
            if (popcount(m) < popcount(pick)) pick = m;
        for (uint32_t bits = pick; bits; bits &= bits - 1) {
            uint32_t elem = bits & -bits;
            std::vector<uint32_t> next;
            next.reserve(remaining.size());
            for (uint32_t m : remaining)
                if (!(m & elem)) next.push_back(m);
            dfs(chosen | elem, depth + 1, next);
        }
    }
};

uint32_t greedy_cover(const std::vector<uint32_t>& masks, int* out_size) {
    std::vector<uint32_t> rem = masks;
    uint32_t chosen = 0;
    int size = 0;
    while (!rem.empty()) {
        uint32_t all = 0;
        for (uint32_t m : rem) all |= m;
        int best_hits = -1;
        uint32_t best_elem = 0;
        for (uint32_t bits = all; bits; bits &= bits - 1) {
            uint32_t elem = bits & -bits;
            int hits = 0;
            for (uint32_t m : rem) hits += (m & elem) != 0;
            if (hits > best_hits) {
                best_hits = hits;
                best_elem = elem;
            }
        }
        chosen |= best_elem;
        ++size;
        std::vector<uint32_t> next;
        next.reserve(rem.size());
        for (uint32_t m : rem)
            if (!(m & best_elem)) next.push_back(m);
        rem.swap(next);
    }
    *out_size = size;
    return chosen;
}

uint32_t min_hitting_set(const std::vector<uint32_t>& raw, int* out_size) {
    std::vector<uint32_t> masks = minimal_masks(raw);
    int ub;
    uint32_t greedy = greedy_cover(masks, &ub);
    HitSearch hs{masks, ub, greedy};
    hs.dfs(0, 0, masks);
    *out_size = hs.best_size;
    return hs.best_set;
}

int td_of(Concept c, const std::vector<Concept>& words, uint32_t* witness) {
    std::vector<uint32_t> masks;
    masks.reserve(words.size() - 1);
    for (Concept cp : words)
        if (cp != c) masks.push_back(c ^ cp);
    if (masks.empty()) {
        *witness = 0;
        return 0;
    }
    int size;
    *witness = min_hitting_set(masks, &size);
    return size;
}

std::vector<int> spectrum_words(const std::vector<Concept>& words, bool parallel_ok) {
    std::vector<int> out(words.size());
    if (parallel_ok) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) num_threads(parallel::max_threads())
        for (long i = 0; i < (long)words.size(); ++i) {
            uint32_t w;
            out[i] = td_of(words[i], words, &w);
        }
        return out;
#endif
    }
    for (size_t i = 0; i < words.size(); ++i) {
        uint32_t w;
        out[i] = td_of(words[i], words, &w);
    }
    return out;
}

} // namespace

TeachingSet teaching_dimension(Concept c, const ConceptClass& C) {
    if (!C.contains(c)) throw input_error("concept is not in the class");
    uint32_t witness;
    td_of(c, C.words(), &witness);
    return TeachingSet{witness, project_one(c, witness)};
}

std::vector<int> td_spectrum(const ConceptClass& C) {
    if (C.empty()) throw domain_error("td_spectrum of the empty class");
    return spectrum_words(C.words(), true);
}

std::vector<int> td_spectrum_serial(const ConceptClass& C) {
    if (C.empty()) throw domain_error("td_spectrum of the empty class");
    return spectrum_words(C.words(), false);
}

int td_min(const ConceptClass& C) {
    auto s = td_spectrum(C);
    return *std::min_element(s.begin(), s.end());
}

int td_max(const ConceptClass& C) {
    auto s = td_spectrum(C);
    return *std::max_element(s.begin(), s.end());
}

TeachingPlan recursive_teaching_plan(const ConceptClass& C) {
    if (C.empty()) throw domain_error("recursive_teaching_plan of the empty class");
    TeachingPlan plan;
    std::vector<Concept> cur = C.words();
    while (!cur.empty()) {
        std::vector<int> tds = spectrum_words(cur, true);
        int mn = *std::min_element(tds.begin(), tds.end());
        TeachingPlan::Level lvl;
        lvl.level_td = mn;
        std::vector<Concept> next;
        for (size_t i = 0; i < cur.size(); ++i) {
            if (tds[i] == mn)
                lvl.removed.push_back(cur[i]);
            else
                next.push_back(cur[i]);
        }
        plan.rtd = std::max(plan.rtd, mn);
        plan.levels.push_back(std::move(lvl));
        cur.swap(next);
    }
    return plan;
}

int rtd(const ConceptClass& C) { return recursive_teaching_plan(C).rtd; }

} // namespace teachdim
