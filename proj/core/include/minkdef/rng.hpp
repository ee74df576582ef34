#pragma once

#include <cstdint>

namespace minkdef {

/// Deterministic splitmix64 generator. The standard library engines are
/// portable but their distributions are not; every random draw in the
/// workbench goes through this class so that reports are byte-identical
/// across platforms for a fixed seed.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound). bound = 0 is treated as 1.
    uint64_t below(uint64_t bound) {
        if (bound == 0) return 0;
        return next() % bound;
    }

    /// Uniform integer in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        if (hi <= lo) return lo;
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

    /// Derives an independent stream for trial `index`; used to make
    /// fan-out over trials order-independent.
    static Rng for_trial(uint64_t seed, uint64_t index) {
        Rng mix(seed ^ (0x51ed2701a3c5e0f7ULL * (index + 1)));
        mix.next();
        return mix;
    }

  private:
    uint64_t state_;
};

} // namespace minkdef
