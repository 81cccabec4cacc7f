#include "scew/rng.hpp"

namespace scew {

uint64_t cell_tag(double theta_T, double gamma, int k, int mode) {
    uint64_t t = static_cast<uint64_t>(theta_T * 1e9 + 0.5);
    uint64_t g = static_cast<uint64_t>(gamma * 1e9 + 0.5);
    uint64_t h = splitmix64(t);
    h = splitmix64(h ^ g);
    h = splitmix64(h ^ static_cast<uint64_t>(k));
    h = splitmix64(h ^ static_cast<uint64_t>(mode));
    return h;
}

uint64_t derive_stream_seed(uint64_t master, uint64_t tag, uint64_t trial_index) {
    return splitmix64(splitmix64(master ^ splitmix64(tag)) ^ trial_index);
}

uint64_t Rng::next_below(uint64_t bound) {
    // accept only draws below the largest multiple of bound
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        uint64_t r = eng_();
        if (r >= threshold) return r % bound;
    }
}

} // namespace scew
