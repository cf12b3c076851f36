#pragma once

#include <cstdint>

namespace iidom {

/// splitmix64 (Steele, Lea, Flood's mixing constants; public domain
/// reference implementation). The exact output stream is part of the
/// reproducibility contract: seeds must generate identical corpora on every
/// platform, so this is used everywhere instead of std::mt19937 and the
/// standard distributions.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// next() % bound. The modulo bias is irrelevant for test-corpus
    /// purposes and keeps the draw trivially re-implementable.
    uint64_t next_below(uint64_t bound) { return next() % bound; }

private:
    uint64_t state_;
};

}  // namespace iidom
