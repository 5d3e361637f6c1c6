#include "sievekit/weights.hpp"

#include <cmath>
#include <memory>
#include <sstream>

#include "sievekit/mollifier.hpp"

namespace skv {

bool is_squarefree_small(u64 n) {
    if (n == 0) return false;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

int mobius_small(u64 n) {
    if (n == 0) throw domain_error("mobius_small: n must be positive");
    int m = 1;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            m = -m;
        }
    }
    if (n > 1) m = -m;
    return m;
}

u64 euler_phi_small(u64 n) {
    if (n == 0) throw domain_error("euler_phi_small: n must be positive");
    u64 r = n;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

namespace {

bool in_simplex(const double* t, int k) {
    double s = 0.0;
    for (int i = 0; i < k; ++i) {
        if (t[i] < 0.0) return false;
        s += t[i];
    }
    return s <= 1.0;
}

}  // namespace

weight_spec builtin_poly_weight(int k, double R) {
    if (k < 1) throw domain_error("builtin_poly_weight: k must be >= 1");
    weight_spec spec;
    spec.k = k;
    spec.R = R;
    spec.provenance = weight_spec::origin::builtin_poly;
    spec.f = [k](const double* t, int n) -> double {
        if (n != k || !in_simplex(t, k)) return 0.0;
        double s = 0.0;
        for (int i = 0; i < k; ++i) s += t[i];
        return std::pow(1.0 - s, double(k + 1));
    };
    double fk = 1.0;
    for (int i = 2; i <= k + 1; ++i) fk *= double(i);  // (k+1)!
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    spec.density = [k, fk, sign](const double* t, int n) -> double {
        if (n != k || !in_simplex(t, k)) return 0.0;
        double s = 0.0;
        for (int i = 0; i < k; ++i) s += t[i];
        return sign * fk * (1.0 - s);
    };
    spec.density_G = [k, fk, sign](const double* t, int n) -> double {
        if (n != k || !in_simplex(t, k)) return 0.0;
        return -sign * fk;
    };
    spec.has_exact = true;
    spec.alpha_exact = fk;
    double fk2 = fk * fk;
    double fact_k2 = fk * double(k + 2);        // (k+2)!
    double fact_k3 = fact_k2 * double(k + 3);   // (k+3)!
    spec.beta1_exact = 2.0 * fk2 / fact_k2;
    spec.beta2_exact = -fk2 / fact_k2;
    spec.density_sq_exact = 2.0 * fk2 / fact_k2;
    spec.avg_sq_exact = 6.0 * fk2 / fact_k3;
    return spec;
}

weight_spec mollified_weight(int k, double R, const sieve_params& p) {
    weight_spec spec;
    spec.k = k;
    spec.R = R;
    spec.provenance = weight_spec::origin::mollified;
    auto mol = std::make_shared<mollifier>(k, p);
    mol->verify_ramp_bounds();
    spec.f = [mol](const double* t, int n) -> double {
        if (n != mol->k()) return 0.0;
        return mol->F(t);
    };
    spec.density = spec.f;  // no closed-form mixed partial; the product form stands in
    return spec;
}

void verify_weight_support(const weight_spec& spec, u64 seed, int samples) {
    if (!spec.f) throw domain_error("verify_weight_support: spec has no f");
    int k = spec.k;
    xoshiro256pp rng(splitmix64(seed));
    double t[8];
    double bound = 0.0;
    for (int i = 0; i < samples; ++i) {
        // half the probes land outside the simplex (scale 2), half inside
        double scale = (i % 2 == 0) ? 2.0 : 1.0 / double(k);
        double s = 0.0;
        for (int j = 0; j < k; ++j) {
            t[j] = scale * rng.uniform();
            s += t[j];
        }
        double v = spec.f(t, k);
        if (!std::isfinite(v)) throw invariant_error("verify_weight_support: non-finite f sample");
        if (s > 1.0 && v != 0.0) {
            std::ostringstream os;
            os << "verify_weight_support: f nonzero outside simplex (sum " << s << ")";
            throw invariant_error(os.str());
        }
        bound = std::max(bound, std::abs(v));
    }
    if (!(bound < 1e300)) throw invariant_error("verify_weight_support: f unbounded on samples");
}

double lambda_value(const weight_spec& spec, const u64* d, const int* mu, int k) {
    double t[8];
    double logR = std::log(spec.R);
    int sign = 1;
    for (int j = 0; j < k; ++j) {
        t[j] = std::log(double(d[j])) / logR;
        sign *= mu[j];
    }
    if (sign == 0) return 0.0;
    return double(sign) * spec.f(t, k);
}

lambda_table build_lambda_table(const weight_spec& spec, u64 W) {
    if (spec.k < 1 || spec.k > 8) throw domain_error("build_lambda_table: k must be in [1, 8]");
    if (!(spec.R > 1.0)) throw domain_error("build_lambda_table: R must exceed 1");
    if (spec.R > 20000.0) throw resource_error("build_lambda_table: R beyond desk budget");
    if (W == 0) throw domain_error("build_lambda_table: W must be positive");
    lambda_table tab;
    tab.spec = spec;
    tab.W = W;
    u64 Rfloor = u64(spec.R);
    for (u64 d = 1; d <= Rfloor; ++d) {
        if (gcd_u64(d, W) != 1) continue;
        int mu = mobius_small(d);
        if (mu == 0) continue;
        tab.cands.push_back(d);
        tab.cand_mu.push_back(mu);
    }
    const u64 max_entries = std::max<u64>(1u << 16, mem_budget() / 48);
    int k = spec.k;
    std::array<u32, 8> idx{};
    u64 dvals[8];
    int mvals[8];
    // depth-first over candidate indices, pruning on the running product
    std::function<void(int, u64)> rec = [&](int depth, u64 prod) {
        if (depth == k) {
            lambda_entry e;
            e.idx = idx;
            e.lam = lambda_value(spec, dvals, mvals, k);
            tab.entries.push_back(e);
            if (tab.entries.size() > max_entries)
                throw resource_error("build_lambda_table: entry count exceeds memory budget");
            return;
        }
        for (u32 c = 0; c < tab.cands.size(); ++c) {
            u64 d = tab.cands[c];
            if (prod * d > Rfloor) break;  // candidates ascend, no deeper product can fit
            idx[size_t(depth)] = c;
            dvals[depth] = d;
            mvals[depth] = tab.cand_mu[size_t(c)];
            rec(depth + 1, prod * d);
        }
    };
    rec(0, 1);
    return tab;
}

}  // namespace skv
