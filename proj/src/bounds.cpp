#include "teachdim/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "teachdim/parallel.hpp"

namespace teachdim {

double default_lambda_star() { return 4.71607; }

double default_alpha() {
    static const double a = std::pow(std::exp(1.0) * default_lambda_star(), 1.0 / default_lambda_star());
    return a;
}

uint64_t ladder_increment(uint64_t x, uint64_t y, uint64_t z) {
    if (x < 1 || y < 1 || z < 1) throw parameter_error("x, y, z must be positive");
    if (y > uint64_t(1) << 62) throw capacity_error("y too large");
    if (x < 64 && y > (uint64_t(1) << x) - 1) throw parameter_error("need y <= 2^x - 1");
    if (z > 2 * y + 1) throw parameter_error("need z <= 2y + 1");
    unsigned __int128 num = (unsigned __int128)(y + 1) * (x - 1) + 1;
    uint64_t den = 2 * y - z + 2;
    return (uint64_t)((num + den - 1) / den);
}

double f_quadratic_bound(uint64_t x, double alpha) {
    if (!(alpha > 1.0 && alpha < 2.0)) throw parameter_error("alpha must be in (1,2)");
    if (x < 1) throw parameter_error("x must be positive");
    double xm = (double)(x - 1);
    return xm * xm / (4 - 2 * alpha) + (3 - 2 * alpha) / (4 - 2 * alpha) * xm;
}

double lambda_star(double alpha, double tol) {
    if (!(alpha > 1.0 && alpha < 2.0)) throw parameter_error("alpha must be in (1,2)");
    if (!(tol > 0)) throw parameter_error("tol must be positive");
    auto g = [&](double l) { return l * std::log(alpha) - std::log(l) - 1.0; };
    double lo = 1.0, hi = 2.0;
    while (g(hi) < 0) {
        lo = hi;
        hi *= 2;
        if (hi > 200.0)
            throw parameter_error("lambda_star exceeds the search ceiling 200; alpha too close to 1");
    }
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        (g(mid) < 0 ? lo : hi) = mid;
    }
    return hi;
}

uint64_t xy_threshold(int d, double alpha) {
    if (d < 1) throw parameter_error("d must be >= 1");
    double l = lambda_star(alpha, 1e-9);
    double v = l * d;
    uint64_t x = (uint64_t)std::ceil(v);
    if (x > 1 && (double)(x - 1) + 1e-9 >= v) --x; // fp snap when v is integral
    // the proof's shattering guarantee, checked in logs
    double lhs = d * (1.0 + std::log((double)x) - std::log((double)d));
    double rhs = (double)x * std::log(alpha);
    if (lhs > rhs + 1e-9)
        throw internal_error("(ex/d)^d <= alpha^x failed at the threshold; lambda_star is wrong");
    return x;
}

double rtd_upper_bound(int d) {
    if (d < 1) throw parameter_error("d must be >= 1");
    double l = default_lambda_star();
    double a = default_alpha();
    double ld = l * d;
    return ld * ld / (4 - 2 * a) + (3 - 2 * a) / (4 - 2 * a) * ld;
}

double rtd_upper_bound(int d, const BoundParams& params) {
    if (d < 1) throw parameter_error("d must be >= 1");
    if (!(params.alpha > 1.0 && params.alpha < 2.0)) throw parameter_error("alpha must be in (1,2)");
    double l = params.lambda ? *params.lambda : lambda_star(params.alpha, 1e-9);
    if (l < 1.0 || l * std::log(params.alpha) - std::log(l) - 1.0 < -1e-6)
        throw parameter_error("lambda does not satisfy the defining inequality");
    uint64_t x = xy_threshold(d, params.alpha);
    if (params.x) {
        if ((double)*params.x < l * d) throw parameter_error("x must be at least lambda*d");
        x = *params.x;
    }
    return f_quadratic_bound(x, params.alpha);
}

uint64_t sauer_bound(uint64_t m, uint64_t d) {
    if (m < 1) throw parameter_error("m must be >= 1");
    if (m > 62) throw capacity_error("sauer_bound limited to m <= 62");
    if (d >= m) return uint64_t(1) << m;
    uint64_t sum = 0, binom = 1;
    for (uint64_t k = 0; k <= d; ++k) {
        sum += binom;
        binom = binom * (m - k) / (k + 1);
    }
    return sum;
}

double sauer_exp_bound(uint64_t m, uint64_t d) {
    if (d == 0) return 1.0;
    return std::pow(std::exp(1.0) * (double)m / (double)d, (double)d);
}

namespace {

// per-Y minimizer: smallest nonempty restriction with pattern-lex tie-break
struct YBest {
    size_t size;
    uint32_t pat;
};

YBest scan_y(const std::vector<Concept>& words, uint32_t Y, int k) {
    if (k > 22) { // too wide for a counting table; sort the extracted patterns
        std::vector<uint32_t> pats;
        pats.reserve(words.size());
        for (Concept c : words) pats.push_back(extract_bits(c, Y));
        std::sort(pats.begin(), pats.end());
        YBest best{SIZE_MAX, 0};
        for (size_t i = 0; i < pats.size();) {
            size_t j = i;
            while (j < pats.size() && pats[j] == pats[i]) ++j;
            size_t cnt = j - i;
            if (cnt < best.size || (cnt == best.size && pattern_lex_less(pats[i], best.pat)))
                best = {cnt, pats[i]};
            i = j;
        }
        return best;
    }
    thread_local std::vector<uint32_t> count;
    thread_local std::vector<uint32_t> gen;
    thread_local uint32_t cur_gen = 0;
    size_t need = size_t(1) << k;
    if (count.size() < need) {
        count.assign(need, 0);
        gen.assign(need, 0);
    }
    if (++cur_gen == 0) {
        std::fill(gen.begin(), gen.end(), 0);
        cur_gen = 1;
    }
    for (Concept c : words) {
        uint32_t p = extract_bits(c, Y);
        if (gen[p] != cur_gen) {
            gen[p] = cur_gen;
            count[p] = 0;
        }
        ++count[p];
    }
    YBest best{SIZE_MAX, 0};
    for (Concept c : words) {
        uint32_t p = extract_bits(c, Y);
        if (gen[p] != cur_gen) continue;
        if (count[p] < best.size || (count[p] == best.size && pattern_lex_less(p, best.pat)))
            best = {count[p], p};
        gen[p] = 0; // visit each realized pattern once
    }
    return best;
}

MinRestriction find_min_impl(const ConceptClass& C, int k, bool parallel_ok) {
    if (C.empty()) throw domain_error("find_min_restriction of the empty class");
    if (k < 1 || k > C.n()) throw parameter_error("k must be in [1, n]");
    int n = C.n();
    const auto& words = C.words();

    MinRestriction best{0, Pattern{0, k}, SIZE_MAX};
    auto better = [&](uint32_t Y, const YBest& yb) {
        if (yb.size != best.size) return yb.size < best.size;
        if (Y != best.Y) return set_lex_less(Y, best.Y);
        return pattern_lex_less(yb.pat, best.b.bits);
    };

    if (parallel_ok) {
#ifdef _OPENMP
        // chunked scan so the Y list never has to materialize fully
        std::vector<uint32_t> block;
        block.reserve(1 << 14);
        uint32_t Y = first_combination(k);
        while (Y) {
            block.clear();
            while (Y && block.size() < (1 << 14)) {
                block.push_back(Y);
                Y = next_combination(Y, n);
            }
            std::vector<MinRestriction> local(block.size());
#pragma omp parallel for schedule(static) num_threads(parallel::max_threads())
            for (long i = 0; i < (long)block.size(); ++i) {
                YBest yb = scan_y(words, block[i], k);
                local[i] = MinRestriction{block[i], Pattern{yb.pat, k}, yb.size};
            }
            for (const auto& mr : local) {
                YBest yb{mr.size, mr.b.bits};
                if (better(mr.Y, yb)) best = mr;
            }
        }
        return best;
#endif
    }
    for (uint32_t Y = first_combination(k); Y; Y = next_combination(Y, n)) {
        YBest yb = scan_y(words, Y, k);
        if (better(Y, yb)) best = MinRestriction{Y, Pattern{yb.pat, k}, yb.size};
    }
    return best;
}

// floor(alpha^x) in uint64, nullopt when it would not fit
std::optional<uint64_t> floor_pow(double alpha, uint64_t x) {
    long double v = std::pow((long double)alpha, (long double)x);
    if (v >= 0x1p62) return std::nullopt;
    return (uint64_t)v;
}

} // namespace

MinRestriction find_min_restriction(const ConceptClass& C, int k) { return find_min_impl(C, k, true); }

MinRestriction find_min_restriction_serial(const ConceptClass& C, int k) {
    return find_min_impl(C, k, false);
}

ConstructResult constructive_teaching_set(const ConceptClass& C, double alpha) {
    if (C.empty()) throw domain_error("constructive_teaching_set of the empty class");
    if (!(alpha > 1.0 && alpha < 2.0)) throw parameter_error("alpha must be in (1,2)");

    ConstructResult res;
    res.trace.alpha = alpha;
    res.trace.lambda_star = lambda_star(alpha, 1e-9);

    if (C.size() == 1) {
        res.c = C.word(0);
        res.ts = TeachingSet{0, Pattern{0, 0}};
        res.trace.d = 0;
        res.trace.x_start = 0;
        res.trace.ts_size = 0;
        res.trace.f_bound = 0;
        res.trace.rtd_bound = 0;
        return res;
    }

    int n = C.n();
    int d = vc_dimension(C);
    uint64_t x = xy_threshold(d, alpha);
    res.trace.d = d;
    res.trace.x_start = x;
    res.trace.f_bound = f_quadratic_bound(x, alpha);
    double ld = res.trace.lambda_star * d;
    res.trace.rtd_bound = ld * ld / (4 - 2 * alpha) + (3 - 2 * alpha) / (4 - 2 * alpha) * ld;

    std::vector<Concept> cur = C.words();
    InstanceSet acc = 0;
    while (cur.size() > 1 && x >= 2) {
        int remaining = n - popcount(acc);
        auto y = floor_pow(alpha, x - 1);
        auto z = floor_pow(alpha, x);
        uint64_t k = 0;
        bool capped = true;
        if (y && z) {
            k = ladder_increment(x - 1, *y, *z);
            capped = k >= (uint64_t)remaining;
        }
        // when floor(alpha^x) overflows, k ~ (x-1)/(2-alpha) dwarfs any legal n
        if (capped) {
            InstanceSet Y = C.full_mask() & ~acc;
            // survivors agree on acc, so every realized pattern on Y is a
            // distinct single concept; take the lex-smallest pattern
            uint32_t bestp = 0;
            bool first = true;
            for (Concept c : cur) {
                uint32_t p = extract_bits(c, Y);
                if (first || pattern_lex_less(p, bestp)) {
                    bestp = p;
                    first = false;
                }
            }
            ChainStep step;
            step.x = x;
            step.y = z;
            step.k = remaining;
            step.restriction_size = 1;
            res.trace.chain.push_back(step);
            acc |= Y;
            Concept survivor = 0;
            for (Concept c : cur)
                if (extract_bits(c, Y) == bestp) survivor = c;
            cur = {survivor};
            break;
        }

        // survivors agree on acc, so work in the projection onto the free
        // coordinates; this keeps every step's Y disjoint from acc
        InstanceSet free_mask = C.full_mask() & ~acc;
        std::vector<Concept> proj;
        proj.reserve(cur.size());
        for (Concept c : cur) proj.push_back(extract_bits(c, free_mask));
        ConceptClass cls(remaining, std::move(proj));
        MinRestriction mr = find_min_restriction(cls, (int)k);
        ConceptClass sub = restrict_class(cls, mr.Y, mr.b);
        if (!is_xy_class(sub, (int)(x - 1), *y))
            throw internal_error("descent restriction is not an (x-1, floor(alpha^(x-1)))-class");
        ChainStep step;
        step.x = x;
        step.y = z;
        step.k = k;
        step.restriction_size = sub.size();
        res.trace.chain.push_back(step);
        InstanceSet Y = deposit_bits(mr.Y, free_mask);
        acc |= Y;
        std::vector<Concept> next;
        next.reserve(sub.size());
        for (Concept c : cur)
            if (extract_bits(c, Y) == mr.b.bits) next.push_back(c);
        cur = std::move(next);
        --x;
    }
    if (cur.size() > 1)
        throw internal_error("descent reached x < 2 with more than one survivor");

    res.c = cur[0];
    res.ts = TeachingSet{acc, project_one(cur[0], acc)};
    res.trace.ts_size = (size_t)popcount(acc);
    return res;
}

} // namespace teachdim
