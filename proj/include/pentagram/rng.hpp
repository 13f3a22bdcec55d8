#pragma once

#include <cstdint>

namespace pentagram {

// SplitMix64. The generator algorithm is part of the tool's reproducibility
// contract: reports quote seeds and identical seeds must reproduce identical
// runs, so the usual std::mt19937 (implementation-pinned but opaque) is
// replaced by this three-line standard mixer.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], hi >= lo. Modulo bias is irrelevant for the
    // sampling done here (tiny ranges against a 64-bit state).
    long long in_range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Derive an independent stream for subtask `tag`.
    SplitMix64 fork(std::uint64_t tag) {
        return SplitMix64(next() ^ (0x9e3779b97f4a7c15ULL * (tag + 1)));
    }

private:
    std::uint64_t state_;
};

} // namespace pentagram
