#pragma once
#include <map>
#include <vector>

#include "teachdim/concepts.hpp"

namespace teachdim {

// minimum distinguishing certificate: no other concept in the reference class
// agrees with `labels` on all of `instances`
struct TeachingSet {
    InstanceSet instances = 0;
    Pattern labels;

    int size() const { return popcount(instances); }
};

// level structure of the recursive removal process: level t removes every
// concept whose teaching dimension inside the surviving class equals that
// class's minimum
struct TeachingPlan {
    struct Level {
        std::vector<Concept> removed;
        int level_td = 0;
    };
    std::vector<Level> levels;
    int rtd = 0;
};

// max_patterns[x] = max over |A| = x of the distinct-pattern count
struct PatternProfile {
    std::map<int, size_t> max_patterns;
};

bool is_shattered(const ConceptClass& C, InstanceSet A);

// largest |A| with A shattered; 0 for singletons; empty class is an error
int vc_dimension(const ConceptClass& C);

PatternProfile pattern_profile(const ConceptClass& C, int x_max);

// projection onto every set of at most x coordinates has at most y patterns;
// by projection monotonicity only |A| = min(x, n) needs checking
bool is_xy_class(const ConceptClass& C, int x, size_t y);

// smallest teaching set for c within C, exact (branch and bound over the
// hitting-set formulation on difference sets)
TeachingSet teaching_dimension(Concept c, const ConceptClass& C);

// teaching dimension of every concept, by class iteration order; OpenMP over
// concepts, and a serial reference twin that must agree bit for bit
std::vector<int> td_spectrum(const ConceptClass& C);
std::vector<int> td_spectrum_serial(const ConceptClass& C);

int td_min(const ConceptClass& C);
int td_max(const ConceptClass& C);

TeachingPlan recursive_teaching_plan(const ConceptClass& C);
int rtd(const ConceptClass& C);

} // namespace teachdim
