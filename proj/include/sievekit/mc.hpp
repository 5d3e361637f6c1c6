#pragma once
#include <functional>

#include "sievekit/common.hpp"

namespace skv {

// splitmix64 step: advances x and returns a mixed output
inline u64 splitmix64(u64& x) {
    x += 0x9E3779B97F4A7C15ULL;
    u64 z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// xoshiro256++: fixed, platform-independent stream for reproducible sampling
struct xoshiro256pp {
    u64 s[4];
    explicit xoshiro256pp(u64 seed) {
        for (auto& v : s) v = splitmix64(seed);
    }
    static u64 rotl(u64 x, int k) { return (x << k) | (x >> (64 - k)); }
    u64 next() {
        u64 r = rotl(s[0] + s[3], 23) + s[0];
        u64 t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return r;
    }
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }  // [0, 1)
};

enum class mc_mode { f_sq, t_gm_sq, t2_gm_sq, t_gm_f, avg_sq };

struct mc_estimate {
    double estimate;
    double stderr_;
    u64 samples;
};

// integrand on a k-tuple
using field_fn = std::function<double(const double*, int)>;

// hit-or-miss Monte Carlo over the scaled simplex (coordinates in [0,r], sum <= r):
//   f_sq:     integral of F^2
//   t_gm_sq:  integral of t_m G_m^2      (m = last coordinate)
//   t2_gm_sq: integral of t_m^2 G_m^2
//   t_gm_f:   integral of t_m G_m F
//   avg_sq:   integral over the (k-1)-simplex of (integral of F over the k-th coordinate)^2
// G_m is dF/dt_m: central difference with step 1e-5 unless an analytic G is supplied.
// Deterministic for a given seed and invariant in `threads` (per-block seeding,
// fixed-order reduction).
mc_estimate simplex_mc(const field_fn& F, const field_fn* G_analytic, int k, double r, mc_mode mode,
                       u64 samples, u64 seed, int threads = 1);

}  // namespace skv
