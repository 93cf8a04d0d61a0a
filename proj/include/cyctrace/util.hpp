#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyctrace {

/// Malformed input data (bad sizes, indices out of range, unknown kind).
/// Distinct from law/identity violations, which are reported as values.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

/// A truncated series does not factor over the requested truncation set:
/// a nonzero coefficient was left at an exponent outside the set.
struct SpanError : std::runtime_error {
    int exponent;
    SpanError(int e, const std::string& what) : std::runtime_error(what), exponent(e) {}
};

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_ll(a, b) * b;
}

inline std::vector<int> divisors_of(int n) {
    std::vector<int> d;
    for (int k = 1; k <= n; ++k)
        if (n % k == 0) d.push_back(k);
    return d;
}

/// Deterministic 64-bit generator (SplitMix64).  The standard library
/// distributions are implementation-defined, so all randomized suites draw
/// through this instead; reports quote the seed and replay bit-for-bit.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n), n > 0.
    std::uint64_t below(std::uint64_t n) {
        // multiply-shift; bias is negligible for the small n used here and,
        // more importantly, the result is identical on every platform.
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    /// Uniform integer in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Independent child generator for a numbered sub-task.
    Rng fork(std::uint64_t salt) {
        Rng child(state ^ (0xa0761d6478bd642fULL * (salt + 1)));
        child.next();
        return child;
    }
};

}  // namespace cyctrace
