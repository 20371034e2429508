#pragma once
#include <cstdint>

namespace lchain {

// splitmix64. Used instead of <random> because the seeded property suites are
// part of the external contract: identical (seed, trials) must give identical
// runs on every platform, and libstdc++/libc++ disagree on distribution output.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform-ish in [lo, hi], inclusive; modulo bias is irrelevant here
    int range(int lo, int hi) {
        if (hi <= lo) return lo;
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool coin() { return (next() & 1) != 0; }

private:
    std::uint64_t state_;
};

} // namespace lchain
