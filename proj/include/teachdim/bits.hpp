#pragma once
#include <bit>
#include <cstdint>
#include <vector>

// Bit conventions used everywhere:
//   - instances are 1-based (instance i lives at bit i-1, LSB first)
//   - a concept is one uint32_t word, bit i-1 = label of instance i
//   - an InstanceSet is a uint32_t mask over the same bit positions
//   - a pattern packs the labels at the coordinates of a set A, in increasing
//     coordinate order, into the low bits (bit j = label at the (j+1)-th
//     smallest coordinate of A)

namespace teachdim {

using InstanceSet = uint32_t;

inline int popcount(uint32_t x) { return std::popcount(x); }

// gather the bits of word at the positions of mask into the low bits (pext)
inline uint32_t extract_bits(uint32_t word, uint32_t mask) {
    uint32_t out = 0;
    int j = 0;
    while (mask) {
        uint32_t low = mask & -mask;
        if (word & low) out |= 1u << j;
        ++j;
        mask ^= low;
    }
    return out;
}

// inverse of extract_bits: scatter the low bits of val to the positions of mask
inline uint32_t deposit_bits(uint32_t val, uint32_t mask) {
    uint32_t out = 0;
    int j = 0;
    while (mask) {
        uint32_t low = mask & -mask;
        if (val >> j & 1) out |= low;
        ++j;
        mask ^= low;
    }
    return out;
}

// Gosper's hack: next k-subset mask in ascending numeric order, 0 when done
inline uint32_t next_combination(uint32_t v, int n) {
    uint32_t u = v & -v;
    uint32_t w = v + u;
    if (w >= 1u << n) return 0;
    return w | (((v ^ w) >> 2) / u);
}

inline uint32_t first_combination(int k) { return (k == 0) ? 0 : (1u << k) - 1; }

// lexicographic order on equal-size instance sets, read as ascending coordinate
// lists: the set containing the lowest differing coordinate is smaller
inline bool set_lex_less(uint32_t a, uint32_t b) {
    if (a == b) return false;
    uint32_t diff = a ^ b;
    return (a & (diff & -diff)) != 0;
}

// lexicographic order on equal-width patterns, read label by label from the
// smallest coordinate up: 0 before 1 at the lowest differing position
inline bool pattern_lex_less(uint32_t a, uint32_t b) {
    if (a == b) return false;
    uint32_t diff = a ^ b;
    return (a & (diff & -diff)) == 0;
}

// 1-based coordinates of a mask, ascending
inline std::vector<int> set_indices(uint32_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    return out;
}

// mask from 1-based coordinates
inline uint32_t set_from_indices(const std::vector<int>& idx) {
    uint32_t m = 0;
    for (int i : idx) m |= 1u << (i - 1);
    return m;
}

} // namespace teachdim
