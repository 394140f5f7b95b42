#pragma once

#include <cstdint>

namespace syz {

// Deterministic 64-bit generator (splitmix64).  Every random choice in the
// project flows from a single seed recorded in reports, so identical seeds
// reproduce identical runs across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), rejection-sampled
    uint64_t below(uint64_t n) {
        if (n == 0) return 0;
        uint64_t lim = ~uint64_t(0) - (~uint64_t(0) % n);
        uint64_t v;
        do { v = next(); } while (v >= lim);
        return v % n;
    }

    uint32_t field_element(uint32_t p) { return static_cast<uint32_t>(below(p)); }
    uint32_t nonzero_field_element(uint32_t p) { return 1u + static_cast<uint32_t>(below(p - 1)); }

    // derive an independent stream (for parallel workers, keyed by index)
    Rng fork(uint64_t key) {
        Rng r(state_ ^ (0xd1342543de82ef95ULL * (key + 1)));
        r.next();
        return r;
    }

private:
    uint64_t state_;
};

} // namespace syz
