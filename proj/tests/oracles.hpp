#pragma once
// Slow reference implementations used to cross-check the library, written
// straight from the definitions with plain loops. Nothing here includes a
// library header; the only shared vocabulary is "word bit i-1 = label of
// instance i".

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline int lab(uint32_t c, int i) { return (int)((c >> (i - 1)) & 1u); }

inline uint32_t word_from_string(const std::string& s) {
    uint32_t w = 0;
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i] == '1') w |= 1u << i;
    return w;
}

inline std::vector<uint32_t> words_from_strings(const std::vector<std::string>& ss) {
    std::vector<uint32_t> out;
    for (auto& s : ss) out.push_back(word_from_string(s));
    return out;
}

// all size-`size` subsets of {1..n} as ascending index vectors, generated in
// lexicographic order of those vectors
inline void subsets_rec(int n, int size, int start, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
    if ((int)cur.size() == size) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i <= n; ++i) {
        cur.push_back(i);
        subsets_rec(n, size, i + 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> subsets_of_size(int n, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    subsets_rec(n, size, 1, cur, out);
    return out;
}

// projection of c onto A as a label string in ascending coordinate order
inline std::string project_str(uint32_t c, const std::vector<int>& A) {
    std::string s;
    for (int i : A) s.push_back(lab(c, i) ? '1' : '0');
    return s;
}

inline std::set<std::string> project_set(const std::vector<uint32_t>& cls,
                                         const std::vector<int>& A) {
    std::set<std::string> pats;
    for (uint32_t c : cls) pats.insert(project_str(c, A));
    return pats;
}

inline bool shattered(const std::vector<uint32_t>& cls, const std::vector<int>& A) {
    return project_set(cls, A).size() == (size_t)1 << A.size();
}

inline int vcd(const std::vector<uint32_t>& cls, int n) {
    int best = 0;
    for (int size = 1; size <= n; ++size)
        for (auto& A : subsets_of_size(n, size))
            if (shattered(cls, A)) best = std::max(best, size);
    return best;
}

// smallest S with no other concept agreeing with c on all of S
inline int td(const std::vector<uint32_t>& cls, int n, uint32_t c) {
    for (int size = 0; size <= n; ++size) {
        for (auto& S : subsets_of_size(n, size)) {
            bool distinguishes = true;
            for (uint32_t other : cls) {
                if (other == c) continue;
                bool agrees = true;
                for (int i : S)
                    if (lab(other, i) != lab(c, i)) { agrees = false; break; }
                if (agrees) { distinguishes = false; break; }
            }
            if (distinguishes) return size;
        }
    }
    return n;
}

inline std::vector<int> spectrum(const std::vector<uint32_t>& cls, int n) {
    std::vector<uint32_t> sorted = cls;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out;
    for (uint32_t c : sorted) out.push_back(td(sorted, n, c));
    return out;
}

inline int td_min(const std::vector<uint32_t>& cls, int n) {
    auto sp = spectrum(cls, n);
    return *std::min_element(sp.begin(), sp.end());
}

inline int td_max(const std::vector<uint32_t>& cls, int n) {
    auto sp = spectrum(cls, n);
    return *std::max_element(sp.begin(), sp.end());
}

// repeatedly strip every concept attaining the current minimum teaching
// dimension; the answer is the largest minimum seen
inline int rtd(const std::vector<uint32_t>& cls, int n) {
    std::vector<uint32_t> cur = cls;
    int best = 0;
    while (!cur.empty()) {
        std::vector<int> tds;
        for (uint32_t c : cur) tds.push_back(td(cur, n, c));
        int m = *std::min_element(tds.begin(), tds.end());
        best = std::max(best, m);
        std::vector<uint32_t> next;
        for (size_t i = 0; i < cur.size(); ++i)
            if (tds[i] != m) next.push_back(cur[i]);
        cur = next;
    }
    return best;
}

// brute-force minimum hitting set over bitmask families: try all 2^n subsets
// by increasing popcount
inline int min_hitting_set(const std::vector<uint32_t>& masks, int n) {
    if (masks.empty()) return 0;
    std::vector<uint32_t> subsets;
    for (uint32_t s = 0; s < (1u << n); ++s) subsets.push_back(s);
    std::stable_sort(subsets.begin(), subsets.end(), [](uint32_t a, uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa < pb;
    });
    for (uint32_t s : subsets) {
        bool hits_all = true;
        for (uint32_t m : masks)
            if ((m & s) == 0) { hits_all = false; break; }
        if (hits_all) return __builtin_popcount(s);
    }
    return n;
}

inline double lambda_star_grid(double alpha, double step = 1e-6) {
    for (double l = 1.0; l < 300.0; l += step)
        if (l * std::log(alpha) - std::log(l) - 1.0 >= 0.0) return l;
    return -1.0;
}

// minimum nonempty restriction over |Y| = k, ties by the documented order:
// Y as ascending index vectors compared lexicographically, then patterns as
// label strings compared lexicographically. First hit during an in-order scan
// is the winner.
struct Restriction {
    std::vector<int> Y;
    std::string b;
    std::vector<uint32_t> members;
};

inline Restriction min_restriction(const std::vector<uint32_t>& cls, int n, int k) {
    Restriction best;
    size_t best_size = cls.size() + 1;
    for (auto& Y : subsets_of_size(n, k)) {
        std::map<std::string, std::vector<uint32_t>> groups;
        for (uint32_t c : cls) groups[project_str(c, Y)].push_back(c);
        for (auto& [b, members] : groups) {
            if (members.size() < best_size) {
                best_size = members.size();
                best = Restriction{Y, b, members};
            }
        }
    }
    return best;
}

// frozen reference values, all recomputed independently of the library
namespace frozen {

// lambda_star(1.71757) at bisection tolerance 1e-9
inline constexpr double lambda_star_default = 4.716082279228829;
// grid scans at step 1e-6 land within one step above the root
inline constexpr double lambda_star_alpha19 = 3.5175824;
inline constexpr double lambda_star_alpha11 = 51.9357724;

// quadratic coefficients at lambda = 4.71607, alpha = (e*lambda)^(1/lambda):
// lambda^2/(4-2a) and (3-2a)/(4-2a)*lambda
inline constexpr double coeff_quad = 39.37512315322162;
inline constexpr double coeff_lin = -3.6330688281390264;
inline constexpr double alpha_default = 1.717571470718305;

inline constexpr double rtd_bound_d1 = 35.7420543250826;
inline constexpr double rtd_bound_d2 = 150.23435495660843;

// f_quadratic_bound(6, 1.71757) and f_quadratic_bound(2, 1.5)
inline constexpr double f_quad_6_default = 40.40700350529335;
inline constexpr double f_quad_2_15 = 1.0;

// floor(1.71757^x) for x = 1..11
inline constexpr uint64_t floor_pow_default[11] = {1, 2, 5, 8, 14, 25, 44, 75, 130, 223, 383};

// generator goldens from an independent mirror of the documented contract
inline constexpr uint64_t splitmix_42[4] = {13679457532755275413ull, 2949826092126892291ull,
                                            5139283748462763858ull, 6349198060258255764ull};
inline constexpr uint64_t xoshiro_42[8] = {
    1546998764402558742ull,  6990951692964543102ull,  12544586762248559009ull,
    17057574109182124193ull, 18295552978065317476ull, 14199186830065750584ull,
    13267978908934200754ull, 15679888225317814407ull};
inline constexpr int bounded10_123[12] = {7, 8, 7, 0, 4, 4, 5, 5, 8, 4, 6, 3};
inline constexpr uint64_t substream_7[4] = {7191089600892374487ull, 309689372594955804ull,
                                            16616101746815609346ull, 10753165928301472203ull};
inline constexpr uint32_t class_n10_N5_seed99[5] = {51, 663, 748, 788, 901};

} // namespace frozen

// small named classes reused across the tests
namespace classes {

inline std::vector<std::string> chain_strings() { return {"000", "001", "011", "111"}; }

inline std::vector<std::string> singleton_strings() { return {"000", "100", "010", "001"}; }

inline std::vector<std::string> rotation_strings() {
    return {"00011", "00110", "01011", "01100", "01101",
            "10001", "10101", "10110", "11000", "11010"};
}

} // namespace classes

} // namespace oracle
