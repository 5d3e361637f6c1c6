#include "sievekit/mc.hpp"

#include <cmath>
#include <sstream>
#include <thread>
#include <vector>

namespace skv {

namespace {

constexpr u64 BLOCK = 1u << 16;
constexpr double FD_STEP = 1e-5;

struct block_acc {
    kahan_sum g, g2;
    bool bad = false;
    std::string bad_where;
};

std::string point_str(const double* t, int n) {
    std::ostringstream os;
    os.precision(17);
    os << "(";
    for (int i = 0; i < n; ++i) os << (i ? ", " : "") << t[i];
    os << ")";
    return os.str();
}

}  // namespace

mc_estimate simplex_mc(const field_fn& F, const field_fn* G_analytic, int k, double r, mc_mode mode,
                       u64 samples, u64 seed, int threads) {
    if (k < 1 || k > 8) throw domain_error("simplex_mc: k must be in [1, 8]");
    if (!(r > 0)) throw domain_error("simplex_mc: r must be positive");
    if (samples < 10000) throw domain_error("simplex_mc: need at least 10^4 samples");
    const int dims = (mode == mc_mode::avg_sq) ? k + 1 : k;
    const int simplex_dims = (mode == mc_mode::avg_sq) ? k - 1 : k;
    if (mode == mc_mode::avg_sq && k < 2)
        throw domain_error("simplex_mc: avg_sq mode needs k >= 2");

    auto eval_G = [&](const double* t) -> double {
        if (G_analytic) return (*G_analytic)(t, k);
        double buf[9];
        for (int i = 0; i < k; ++i) buf[i] = t[i];
        buf[k - 1] = t[k - 1] + FD_STEP;
        double up = F(buf, k);
        buf[k - 1] = t[k - 1] - FD_STEP;
        double dn = F(buf, k);
        return (up - dn) / (2.0 * FD_STEP);
    };

    const u64 nblocks = (samples + BLOCK - 1) / BLOCK;
    std::vector<block_acc> acc(static_cast<size_t>(nblocks));

    auto run_block = [&](u64 bi) {
        block_acc& a = acc[size_t(bi)];
        u64 sm = seed + (bi + 1) * 0x9E3779B97F4A7C15ULL;
        xoshiro256pp rng(splitmix64(sm));
        u64 count = (bi + 1 == nblocks && samples % BLOCK) ? samples % BLOCK : BLOCK;
        double t[9];
        for (u64 i = 0; i < count; ++i) {
            double sum = 0.0;
            for (int d = 0; d < dims; ++d) {
                t[d] = r * rng.uniform();
                if (d < simplex_dims) sum += t[d];
            }
            double g = 0.0;
            if (sum <= r) {
                switch (mode) {
                    case mc_mode::f_sq: {
                        double v = F(t, k);
                        g = v * v;
                        break;
                    }
                    case mc_mode::t_gm_sq: {
                        double v = eval_G(t);
                        g = t[k - 1] * v * v;
                        break;
                    }
                    case mc_mode::t2_gm_sq: {
                        double v = eval_G(t);
                        g = t[k - 1] * t[k - 1] * v * v;
                        break;
                    }
                    case mc_mode::t_gm_f: {
                        g = t[k - 1] * eval_G(t) * F(t, k);
                        break;
                    }
                    case mc_mode::avg_sq: {
                        double buf[9];
                        for (int d = 0; d < k - 1; ++d) buf[d] = t[d];
                        buf[k - 1] = t[k - 1];
                        double v1 = F(buf, k);
                        buf[k - 1] = t[k];
                        double v2 = F(buf, k);
                        g = v1 * v2;
                        break;
                    }
                }
            }
            if (!std::isfinite(g)) {
                a.bad = true;
                a.bad_where = point_str(t, dims);
                return;
            }
            a.g.add(g);
            a.g2.add(g * g);
        }
    };

    if (threads <= 1 || nblocks == 1) {
        for (u64 b = 0; b < nblocks; ++b) run_block(b);
    } else {
        int nt = int(std::min<u64>(u64(threads), nblocks));
        std::vector<std::thread> pool;
        for (int tix = 0; tix < nt; ++tix)
            pool.emplace_back([&, tix] {
                for (u64 b = u64(tix); b < nblocks; b += u64(nt)) run_block(b);
            });
        for (auto& th : pool) th.join();
    }

    for (const auto& a : acc)
        if (a.bad) throw numeric_error("simplex_mc: non-finite sample at " + a.bad_where);

    kahan_sum S1, S2;
    for (const auto& a : acc) {
        S1.add(a.g.value());
        S2.add(a.g2.value());
    }
    double n = double(samples);
    double mean = S1.value() / n;
    double var = std::max(0.0, S2.value() / n - mean * mean) * n / std::max(1.0, n - 1.0);
    double vol = std::pow(r, double(dims));
    return {vol * mean, vol * std::sqrt(var / n), samples};
}

}  // namespace skv
