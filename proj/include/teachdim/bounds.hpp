#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "teachdim/concepts.hpp"
#include "teachdim/measures.hpp"

namespace teachdim {

// lambda* = 4.71607, the base that optimizes the quadratic coefficient, and
// the matching alpha = (e*lambda*)^(1/lambda*)
double default_lambda_star();
double default_alpha();

struct BoundParams {
    double alpha;
    std::optional<double> lambda = std::nullopt; // recomputed from alpha when absent
    std::optional<uint64_t> x = std::nullopt;    // chain start; defaults to ceil(lambda*d)
};

// one descent level: at chain position x the class is an (x, floor(alpha^x))-
// class; k instances are consumed stepping down to x-1. y is absent when
// floor(alpha^x) exceeds the uint64 range (the step then trivially caps).
struct ChainStep {
    uint64_t x = 0;
    std::optional<uint64_t> y = std::nullopt;
    uint64_t k = 0;
    std::optional<size_t> restriction_size = std::nullopt;
};

struct BoundReport {
    int d = 0;
    double alpha = 0;
    double lambda_star = 0;
    uint64_t x_start = 0;
    std::vector<ChainStep> chain;
    std::optional<size_t> ts_size = std::nullopt;
    double f_bound = 0;
    double rtd_bound = 0;
};

// k = ceil(((y+1)(x-1)+1) / (2y-z+2)), requires y <= 2^x-1 and z <= 2y+1
uint64_t ladder_increment(uint64_t x, uint64_t y, uint64_t z);

// (x-1)^2/(4-2a) + (3-2a)/(4-2a)*(x-1) for a in (1,2)
double f_quadratic_bound(uint64_t x, double alpha);

// unique root >= 1 of lambda*ln(alpha) - ln(lambda) - 1 = 0, by bisection on a
// doubling bracket capped at 200
double lambda_star(double alpha, double tol);

// smallest integer x >= lambda*(alpha) * d; asserts (e*x/d)^d <= alpha^x
uint64_t xy_threshold(int d, double alpha);

// default path reproduces 39.3752 d^2 - 3.6330 d; explicit params evaluate the
// quadratic at the integer chain start instead
double rtd_upper_bound(int d);
double rtd_upper_bound(int d, const BoundParams& params);

// sum_{k<=d} binom(m,k), and the (e*m/d)^d closed form
uint64_t sauer_bound(uint64_t m, uint64_t d);
double sauer_exp_bound(uint64_t m, uint64_t d);

struct MinRestriction {
    InstanceSet Y = 0;
    Pattern b;
    size_t size = 0;
};

// smallest nonempty restriction over all |Y| = k and realized patterns b; ties
// broken by lexicographically smallest (Y, b). OpenMP over the Y scan, with a
// serial twin that must return the identical minimizer.
MinRestriction find_min_restriction(const ConceptClass& C, int k);
MinRestriction find_min_restriction_serial(const ConceptClass& C, int k);

struct ConstructResult {
    Concept c = 0;
    TeachingSet ts;
    BoundReport trace;
};

// repeatedly take the smallest k-restriction, accumulating each Y into a
// teaching set for the one concept that survives to the end
ConstructResult constructive_teaching_set(const ConceptClass& C, double alpha);

} // namespace teachdim
