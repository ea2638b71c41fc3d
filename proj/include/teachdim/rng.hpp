#pragma once
#include <cstdint>
#include <algorithm>
#include <unordered_set>
#include <vector>

#include "teachdim/errors.hpp"

// Reproducibility contract (part of the public interface, documented in the
// README): seeds are portable across platforms and implementations.
//
//   state      xoshiro256**, seeded by four consecutive splitmix64 outputs
//   bounded(s) threshold rejection: draw until x >= (2^64 - s) % s, return x % s
//   substream  substream i of master seed s is seeded with the (i+1)-th
//              splitmix64 output from state s
//   sampling   N distinct concepts via Floyd's algorithm over bounded draws,
//              then sorted ascending

namespace teachdim {

struct splitmix64 {
    uint64_t s;
    uint64_t next() {
        uint64_t z = (s += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

struct rng {
    uint64_t s[4];

    explicit rng(uint64_t seed) {
        splitmix64 sm{seed};
        for (auto& w : s) w = sm.next();
    }

    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t next() {
        uint64_t result = rotl(s[1] * 5, 7) * 9;
        uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return result;
    }

    // uniform integer in [0, bound)
    uint64_t bounded(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

    double unit() { return (next() >> 11) * 0x1.0p-53; }

    bool coin() { return next() >> 63; }
};

inline uint64_t substream_seed(uint64_t seed, uint64_t index) {
    splitmix64 sm{seed};
    uint64_t v = 0;
    for (uint64_t i = 0; i <= index; ++i) v = sm.next();
    return v;
}

// Floyd's algorithm: uniform sample of `count` distinct values from [0, space)
inline std::vector<uint32_t> sample_distinct(uint64_t space, uint32_t count, rng& g) {
    if (count > space) throw parameter_error("sample count exceeds space size");
    std::unordered_set<uint32_t> seen;
    seen.reserve(count * 2);
    std::vector<uint32_t> out;
    out.reserve(count);
    for (uint64_t j = space - count; j < space; ++j) {
        uint32_t t = (uint32_t)g.bounded(j + 1);
        if (seen.count(t)) t = (uint32_t)j;
        seen.insert(t);
        out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace teachdim
