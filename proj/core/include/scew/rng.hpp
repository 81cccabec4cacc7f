#pragma once

#include <cstdint>
#include <random>

namespace scew {

// 64-bit finalizing mix; used to derive independent per-trial seeds from a
// master seed so trials are reproducible regardless of execution order.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/**
 * Tag identifying a sweep cell by its parameters, independent of grid
 * enumeration order.  Rates are scaled to integers so the tag does not
 * depend on floating-point formatting.
 */
uint64_t cell_tag(double theta_T, double gamma, int k, int mode);

// Documented splitting rule: seed = mix(mix(master ^ mix(tag)) ^ trial).
uint64_t derive_stream_seed(uint64_t master, uint64_t tag, uint64_t trial_index);

/**
 * Seedable random stream.  Wraps std::mt19937_64; doubles and bounded
 * integers are drawn through fixed code paths (not std distributions) so
 * that streams are identical across standard library implementations.
 */
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    // uniform in [0,1), 53 bits, exactly determined by the engine output
    double next_double() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return next_double() < p; }

    // uniform in [0, bound), modulo-rejection to avoid bias
    uint64_t next_below(uint64_t bound);

    int64_t uniform_int(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(next_below(static_cast<uint64_t>(hi - lo) + 1));
    }

    // Pr(L = l) = (1 - rho) * rho^(l-1), l >= 1
    int64_t geometric_from_one(double rho) {
        int64_t l = 1;
        while (bernoulli(rho)) ++l;
        return l;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace scew
