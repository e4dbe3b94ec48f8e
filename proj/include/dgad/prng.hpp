#pragma once

#include <cstdint>

namespace dgad {

/// SplitMix64: the single seeded generator behind every random choice in
/// this project. State advances by the 64-bit golden-ratio increment and
/// the output is the standard finalizer of the new state, so identical
/// seeds produce identical sequences on every platform.
///
/// Steele Jr, Guy L., Doug Lea, and Christine H. Flood.
/// "Fast splittable pseudorandom number generators." OOPSLA 2014.
class Prng {
public:
    explicit Prng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += UINT64_C(0x9E3779B97F4A7C15));
        z = (z ^ (z >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)) * UINT64_C(0x94D049BB133111EB);
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n). Modulo reduction; bias is negligible for the
    /// small ranges used here and keeps draw counts predictable.
    uint64_t next_below(uint64_t n) { return next() % n; }

    /// Uniform double in [0, 1) with 53 bits of precision.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    uint64_t state() const { return state_; }

private:
    uint64_t state_;
};

} // namespace dgad
