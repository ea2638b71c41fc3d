#include "teachdim/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace teachdim {

bool canonical_is_exact(int n) { return n <= 8; }

namespace {

// apply coordinate permutation perm (bit i of the input moves to bit perm[i])
uint32_t permute_word(uint32_t w, const std::array<int, 8>& perm, int n) {
    uint32_t out = 0;
    for (int i = 0; i < n; ++i)
        if (w >> i & 1) out |= 1u << perm[i];
    return out;
}

// exact minimum over all n! permutations and all flips. Only flips of the form
// f = perm(c) for some c in C can reach the sorted-vector minimum (the minimum
// must contain the all-zeros word), so the flip loop runs over class members.
std::vector<Concept> exact_min(const ConceptClass& C) {
    int n = C.n();
    std::array<int, 8> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    std::vector<Concept> best;
    std::vector<Concept> cand(C.size());
    std::vector<Concept> permuted(C.size());
    do {
        for (size_t i = 0; i < C.size(); ++i) permuted[i] = permute_word(C.word(i), perm, n);
        for (Concept flip : permuted) {
            for (size_t i = 0; i < permuted.size(); ++i) cand[i] = permuted[i] ^ flip;
            std::sort(cand.begin(), cand.end());
            if (best.empty() || cand < best) best = cand;
        }
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return best;
}

// heuristic for n > 8: flip each column to make 1s the minority (ties keep),
// then sort columns by (column weight, column bit pattern over the sorted
// class). Deterministic and orbit-insensitive in common cases, not canonical.
std::vector<Concept> greedy_refine(const ConceptClass& C) {
    int n = C.n();
    size_t m = C.size();
    std::vector<Concept> words = C.words();
    for (int i = 0; i < n; ++i) {
        size_t ones = 0;
        for (Concept w : words) ones += w >> i & 1;
        if (2 * ones > m)
            for (Concept& w : words) w ^= 1u << i;
    }
    std::sort(words.begin(), words.end());
    // column key: bits of column i read down the sorted class
    std::vector<std::pair<std::vector<uint32_t>, int>> cols(n);
    for (int i = 0; i < n; ++i) {
        std::vector<uint32_t> key((m + 31) / 32, 0);
        size_t ones = 0;
        for (size_t r = 0; r < m; ++r) {
            uint32_t bit = words[r] >> i & 1;
            ones += bit;
            if (bit) key[r / 32] |= 1u << (r % 32);
        }
        key.insert(key.begin(), (uint32_t)ones);
        cols[i] = {std::move(key), i};
    }
    std::sort(cols.begin(), cols.end());
    std::vector<Concept> out(m, 0);
    for (int newpos = 0; newpos < n; ++newpos) {
        int old = cols[newpos].second;
        for (size_t r = 0; r < m; ++r)
            if (words[r] >> old & 1) out[r] |= 1u << newpos;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

ConceptClass canonical_form(const ConceptClass& C) {
    if (canonical_is_exact(C.n())) return ConceptClass(C.n(), exact_min(C));
    return ConceptClass(C.n(), greedy_refine(C));
}

} // namespace teachdim
