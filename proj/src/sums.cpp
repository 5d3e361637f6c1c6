#include "sievekit/sums.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>
#include <thread>

#include "sievekit/admissible.hpp"
#include "sievekit/arith.hpp"
#include "sievekit/factor_table.hpp"
#include "json.hpp"

namespace skv {

namespace {

// smallest n >= x with n = r (mod M), r < M
u64 first_in_ap(u64 x, u64 r, u64 M) {
    if (r >= x) return r;
    return r + ((x - r + M - 1) / M) * M;
}

void validate_tuple(const std::vector<i64>& tuple, const lambda_table& table) {
    if (int(tuple.size()) != table.spec.k)
        throw domain_error("weighted sum: tuple size must equal the table's k");
    for (size_t i = 1; i < tuple.size(); ++i)
        if (tuple[i] <= tuple[i - 1]) throw domain_error("weighted sum: tuple must be strictly increasing");
    if (tuple.front() < 0) throw domain_error("weighted sum: offsets must be nonnegative");
}

// per-n inner sum over divisor tuples: sum_{d_j | n+h_j, prod d <= R} lambda(d)
class inner_eval {
  public:
    explicit inner_eval(const lambda_table& tab) : tab_(tab), Rfloor_(u64(tab.spec.R)) {}

    double operator()(u64 n, const std::vector<i64>& tuple) {
        int k = tab_.spec.k;
        for (int j = 0; j < k; ++j) {
            divs_[j].clear();
            u64 v = u64(i64(n) + tuple[size_t(j)]);
            for (u32 c = 0; c < tab_.cands.size(); ++c)
                if (v % tab_.cands[c] == 0) divs_[j].push_back(c);
        }
        sum_ = 0.0;
        dfs(0, 1, k);
        return sum_;
    }

  private:
    void dfs(int depth, u64 prod, int k) {
        if (depth == k) {
            sum_ += lambda_value(tab_.spec, dvals_, mvals_, k);
            return;
        }
        for (u32 c : divs_[size_t(depth)]) {
            u64 d = tab_.cands[size_t(c)];
            if (prod * d > Rfloor_) break;  // divisor lists ascend
            dvals_[depth] = d;
            mvals_[depth] = tab_.cand_mu[size_t(c)];
            dfs(depth + 1, prod * d, k);
        }
    }

    const lambda_table& tab_;
    u64 Rfloor_;
    std::vector<u32> divs_[8];
    u64 dvals_[8];
    int mvals_[8];
    double sum_ = 0.0;
};

std::pair<i64, i64> tuple_range(const std::vector<i64>& tuple) {
    auto [mn, mx] = std::minmax_element(tuple.begin(), tuple.end());
    return {*mn, *mx};
}

constexpr u64 CHUNK = 4096;  // n's per reduction chunk, fixed for thread invariance

}  // namespace

double weighted_sum_direct(u64 x, const std::vector<i64>& tuple, u64 b, u64 W,
                           const lambda_table& table, sum_weight weight, int threads) {
    if (x < 2) throw domain_error("weighted_sum_direct: x must be >= 2");
    if (W == 0 || b == 0 || b > W) throw domain_error("weighted_sum_direct: need 1 <= b <= W");
    validate_tuple(tuple, table);
    int k = table.spec.k;
    if (weight.w != sum_weight::kind::one) {
        if (weight.j < 1 || weight.j > k) throw domain_error("weighted_sum_direct: weight coordinate out of range");
        if (weight.w == sum_weight::kind::sqfree_excl && weight.p < 2)
            throw domain_error("weighted_sum_direct: sqfree_excl needs p >= 2");
    }
    auto [hmin, hmax] = tuple_range(tuple);

    std::unique_ptr<factor_table> ft;
    if (weight.w == sum_weight::kind::theta || weight.w == sum_weight::kind::tau)
        ft = std::make_unique<factor_table>(u64(i64(x) + hmin), u64(i64(2 * x) + hmax));

    u64 first = first_in_ap(x, b % W, W);
    if (first >= 2 * x) return 0.0;
    u64 N = (2 * x - first + W - 1) / W;
    u64 nchunks = (N + CHUNK - 1) / CHUNK;
    std::vector<double> partial(static_cast<size_t>(nchunks), 0.0);

    i64 hw = (weight.w == sum_weight::kind::one) ? 0 : tuple[size_t(weight.j - 1)];
    u64 p2 = (weight.w == sum_weight::kind::sqfree_excl) ? weight.p * weight.p : 0;

    auto run_chunk = [&](u64 ci) {
        inner_eval inner(table);
        kahan_sum acc;
        u64 i_end = std::min(N, (ci + 1) * CHUNK);
        for (u64 i = ci * CHUNK; i < i_end; ++i) {
            u64 n = first + i * W;
            double wfac = 1.0;
            if (weight.w != sum_weight::kind::one) {
                u64 v = u64(i64(n) + hw);
                switch (weight.w) {
                    case sum_weight::kind::theta:
                        wfac = ft->prime(v) ? std::log(double(v)) : 0.0;
                        break;
                    case sum_weight::kind::tau:
                        wfac = double(ft->tau(v));
                        break;
                    case sum_weight::kind::sqfree_excl:
                        wfac = (v % p2 == 0) ? 1.0 : 0.0;
                        break;
                    default:
                        break;
                }
                if (wfac == 0.0) continue;
            }
            double s = inner(n, tuple);
            if (s != 0.0) acc.add(wfac * s * s);
        }
        partial[size_t(ci)] = acc.value();
    };

    if (threads <= 1 || nchunks == 1) {
        for (u64 c = 0; c < nchunks; ++c) run_chunk(c);
    } else {
        int nt = int(std::min<u64>(u64(threads), nchunks));
        std::vector<std::thread> pool;
        for (int t = 0; t < nt; ++t)
            pool.emplace_back([&, t] {
                for (u64 c = u64(t); c < nchunks; c += u64(nt)) run_chunk(c);
            });
        for (auto& th : pool) th.join();
    }
    kahan_sum total;
    for (double v : partial) total.add(v);
    return total.value();
}

namespace {

// extended gcd inverse: a^{-1} mod m for coprime a, m
u64 inv_mod(u64 a, u64 m) {
    i64 t = 0, newt = 1;
    i64 r = i64(m), newr = i64(a % m);
    while (newr != 0) {
        i64 q = r / newr;
        i64 tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw invariant_error("inv_mod: arguments not coprime");
    if (t < 0) t += i64(m);
    return u64(t);
}

std::vector<u64> small_prime_factors(u64 n) {
    std::vector<u64> ps;
    for (u64 p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

double weighted_sum_bilinear(u64 x, const std::vector<i64>& tuple, u64 b, u64 W,
                             const lambda_table& table, sum_weight weight) {
    if (x < 2) throw domain_error("weighted_sum_bilinear: x must be >= 2");
    if (W == 0 || b == 0 || b > W) throw domain_error("weighted_sum_bilinear: need 1 <= b <= W");
    validate_tuple(tuple, table);
    if (weight.w != sum_weight::kind::one && weight.w != sum_weight::kind::tau)
        throw domain_error("weighted_sum_bilinear: only weights {one, tau} rearrange exactly");
    int k = table.spec.k;
    if (weight.w == sum_weight::kind::tau && (weight.j < 1 || weight.j > k))
        throw domain_error("weighted_sum_bilinear: weight coordinate out of range");

    // identity precondition: no prime <= R, coprime to W, divides a pairwise
    // offset difference -- otherwise the coprimality-constrained rearrangement
    // misses genuine shared-modulus terms of the direct sum
    u64 Rfloor = u64(table.spec.R);
    for (size_t i = 0; i < tuple.size(); ++i)
        for (size_t j = i + 1; j < tuple.size(); ++j) {
            u64 diff = u64(tuple[j] - tuple[i]);
            for (u64 p : small_prime_factors(diff))
                if (p <= Rfloor && gcd_u64(p, W) == 1) {
                    std::ostringstream os;
                    os << "weighted_sum_bilinear: prime " << p << " <= R divides offset difference "
                       << diff << " and is coprime to W; the bilinear identity does not hold";
                    throw invariant_error(os.str());
                }
        }

    auto [hmin, hmax] = tuple_range(tuple);
    std::unique_ptr<factor_table> ft;
    if (weight.w == sum_weight::kind::tau)
        ft = std::make_unique<factor_table>(u64(i64(x) + hmin), u64(i64(2 * x) + hmax));
    i64 hw = (weight.w == sum_weight::kind::tau) ? tuple[size_t(weight.j - 1)] : 0;

    const auto& ents = table.entries;
    u64 E = ents.size();
    if (E * E > 2000000000ull) throw resource_error("weighted_sum_bilinear: entry-pair count exceeds budget");

    kahan_sum total;
    u64 dv[8], ev[8], L[8], DE[8];
    for (u64 ia = 0; ia < E; ++ia) {
        if (ents[size_t(ia)].lam == 0.0) continue;
        for (int j = 0; j < k; ++j) dv[j] = table.cands[ents[size_t(ia)].idx[size_t(j)]];
        for (u64 ib = 0; ib < E; ++ib) {
            double ll = ents[size_t(ia)].lam * ents[size_t(ib)].lam;
            if (ll == 0.0) continue;
            for (int j = 0; j < k; ++j) {
                ev[j] = table.cands[ents[size_t(ib)].idx[size_t(j)]];
                u64 g = gcd_u64(dv[j], ev[j]);
                L[j] = dv[j] / g * ev[j];
                DE[j] = dv[j] * ev[j];
            }
            bool coprime = true;
            for (int i = 0; i < k && coprime; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (gcd_u64(DE[i], DE[j]) != 1) { coprime = false; break; }
            if (!coprime) continue;  // zero by the validated precondition

            // combine n = b (W), n = -h_j (L_j); defer congruences once the
            // modulus outgrows the window (at most one candidate n remains)
            u64 M = W, r = b % W;
            int deferred[8];
            int ndef = 0;
            for (int j = 0; j < k; ++j) {
                if (L[j] == 1) continue;
                u128 newM = u128(M) * L[j];
                if (M <= 2 * x && newM <= (u128(1) << 62)) {
                    u64 t = (L[j] - u64(tuple[size_t(j)]) % L[j]) % L[j];  // n = -h_j (mod L_j)
                    u64 s = mulmod((t + L[j] - r % L[j]) % L[j], inv_mod(M % L[j], L[j]), L[j]);
                    r = r + M * s;
                    M = u64(newM);
                } else {
                    deferred[ndef++] = j;
                }
            }
            u64 first = first_in_ap(x, r, M);
            double contrib = 0.0;
            for (u64 n = first; n < 2 * x; n += M) {
                bool ok = true;
                for (int di = 0; di < ndef; ++di) {
                    int j = deferred[di];
                    if (u64(i64(n) + tuple[size_t(j)]) % L[j] != 0) { ok = false; break; }
                }
                if (!ok) continue;
                contrib += (weight.w == sum_weight::kind::tau) ? double(ft->tau(u64(i64(n) + hw))) : 1.0;
            }
            if (contrib != 0.0) total.add(ll * contrib);
        }
    }
    return total.value();
}

namespace {

// wrap a density so the requested coordinate plays the last-coordinate role
field_fn swap_to_last(const field_fn& F, int m_index, int k) {
    if (m_index == k) return F;
    int mi = m_index - 1;
    return [F, mi, k](const double* t, int n) -> double {
        double buf[8];
        for (int i = 0; i < k; ++i) buf[i] = t[i];
        std::swap(buf[mi], buf[k - 1]);
        return F(buf, n);
    };
}

double phi_ratio_pow(u64 W, int k) {
    // W^(k-1)/phi(W)^k
    double phi = double(euler_phi_small(W));
    double v = 1.0 / phi;
    for (int i = 1; i < k; ++i) v *= double(W) / phi;
    return v;
}

}  // namespace

tt_prediction thm_tt_prediction(double x, double R, u64 W, int k, const weight_spec& spec,
                                int m_index, u64 mc_samples, u64 seed, int threads) {
    if (!(x > 1.0) || !(R > 1.0)) throw domain_error("thm_tt_prediction: need x, R > 1");
    if (W == 0) throw domain_error("thm_tt_prediction: W must be positive");
    if (k != spec.k) throw domain_error("thm_tt_prediction: k must match the weight spec");
    if (m_index < 1 || m_index > k) throw domain_error("thm_tt_prediction: coordinate index out of range");
    tt_prediction out{};
    if (spec.has_exact) {
        out.alpha = spec.alpha_exact;
        out.beta1 = spec.beta1_exact;
        out.beta2 = spec.beta2_exact;
    } else {
        if (!spec.density) throw domain_error("thm_tt_prediction: weight spec carries no density");
        field_fn F = swap_to_last(spec.density, m_index, k);
        field_fn G;
        const field_fn* Gp = nullptr;
        if (spec.density_G) {
            G = swap_to_last(spec.density_G, m_index, k);
            Gp = &G;
        }
        auto a = simplex_mc(F, Gp, k, 1.0, mc_mode::t_gm_sq, mc_samples, seed, threads);
        auto b1 = simplex_mc(F, Gp, k, 1.0, mc_mode::t2_gm_sq, mc_samples, seed + 1, threads);
        auto b2 = simplex_mc(F, Gp, k, 1.0, mc_mode::t_gm_f, mc_samples, seed + 2, threads);
        out.alpha = a.estimate;
        out.alpha_se = a.stderr_;
        out.beta1 = b1.estimate;
        out.beta1_se = b1.stderr_;
        out.beta2 = b2.estimate;
        out.beta2_se = b2.stderr_;
    }
    double lR = std::log(R);
    out.value = (std::log(x) / lR * out.alpha - out.beta1 + 4.0 * out.beta2) * x /
                std::pow(lR, double(k)) * phi_ratio_pow(W, k);
    return out;
}

s_mains s_predictions(double x, double R, u64 W, const weight_spec& spec, u64 mc_samples, u64 seed,
                      int threads) {
    if (!(x > 1.0) || !(R > 1.0)) throw domain_error("s_predictions: need x, R > 1");
    if (W == 0) throw domain_error("s_predictions: W must be positive");
    int k = spec.k;
    if (k < 2 || k % 2 != 0) throw domain_error("s_predictions: weight dimension must be even (paired offsets)");
    int k0 = k / 2;
    s_mains out{};
    if (spec.has_exact) {
        out.avg_sq_integral = spec.avg_sq_exact;
        out.density_sq_integral = spec.density_sq_exact;
    } else {
        if (!spec.density) throw domain_error("s_predictions: weight spec carries no density");
        auto i1 = simplex_mc(spec.density, nullptr, k, 1.0, mc_mode::avg_sq, mc_samples, seed, threads);
        auto i0 = simplex_mc(spec.density, nullptr, k, 1.0, mc_mode::f_sq, mc_samples, seed + 1, threads);
        out.avg_sq_integral = i1.estimate;
        out.density_sq_integral = i0.estimate;
    }
    double lR = std::log(R);
    double wphi = phi_ratio_pow(W, k);
    out.S1_main = double(k0) * x / std::pow(lR, double(k - 1)) * wphi * out.avg_sq_integral;
    out.S0_main = x * std::log(x) / std::pow(lR, double(k)) * wphi * out.density_sq_integral;
    return out;
}

positivity_result positivity_functional(u64 x, const std::vector<i64>& paired_tuple, int m,
                                        double C2, const lambda_table& table) {
    if (x < 2) throw domain_error("positivity_functional: x must be >= 2");
    if (m < 1) throw domain_error("positivity_functional: m must be >= 1");
    if (!(C2 > 0)) throw domain_error("positivity_functional: C2 must be positive");
    validate_tuple(paired_tuple, table);
    int k = table.spec.k;
    if (k % 2 != 0) throw domain_error("positivity_functional: tuple size must be even");
    for (int j = 0; j + 1 < k; j += 2)
        if (paired_tuple[size_t(j) + 1] != paired_tuple[size_t(j)] + 2)
            throw domain_error("positivity_functional: offsets must come in (h, h+2) pairs");
    u64 W = table.W;
    u64 b = choose_b(paired_tuple, W);
    auto [hmin, hmax] = tuple_range(paired_tuple);
    factor_table ft(u64(i64(x) + hmin), u64(i64(2 * x) + hmax));

    double mlog3x = double(m) * std::log(3.0 * double(x));
    inner_eval inner(table);
    kahan_sum acc_r, acc_u;
    u64 terms = 0;
    for (u64 n = first_in_ap(x, b % W, W); n < 2 * x; n += W) {
        ++terms;
        double s = inner(n, paired_tuple);
        if (s == 0.0) continue;
        double bracket = -mlog3x;
        bool sqfree_even = true;
        for (int j = 0; j + 1 < k; j += 2) {
            u64 odd = u64(i64(n) + paired_tuple[size_t(j)]);
            u64 even = u64(i64(n) + paired_tuple[size_t(j) + 1]);
            if (ft.prime(odd))
                bracket += std::log(double(odd)) * (1.0 - double(ft.tau(even)) / C2);
            if (!ft.squarefree(even)) sqfree_even = false;
        }
        double term = bracket * s * s;
        acc_u.add(term);
        if (sqfree_even) acc_r.add(term);
    }
    return {acc_r.value(), acc_u.value(), b, terms};
}

sim_report simulate(const sim_config& cfg) {
    sim_report rep;
    rep.x = cfg.x;
    if (cfg.x < 10) throw domain_error("simulate: x too small");
    rep.tuple = cfg.tuple.empty() ? std::vector<i64>{0, 2, 6, 8} : cfg.tuple;
    int k = int(rep.tuple.size());
    auto adm = check_admissible(rep.tuple);
    if (!adm.admissible)
        throw domain_error("simulate: tuple is inadmissible (covering prime " +
                           std::to_string(adm.covering_prime) + ")");
    rep.w = cfg.w;
    u128 Wbig = primorial(cfg.w);
    if (Wbig > u128(1) << 40) throw resource_error("simulate: primorial of w too large for desk run");
    rep.W = u64(Wbig);
    rep.b = choose_b(rep.tuple, rep.W);
    rep.m = cfg.m;
    rep.w_asymptotic = std::log(std::log(std::log(double(cfg.x))));
    rep.R_asymptotic_exponent = 0.25 - 1.0 / (1000.0 * cfg.m);
    rep.R_asymptotic = std::pow(double(cfg.x), rep.R_asymptotic_exponent);
    rep.R = cfg.R > 0 ? cfg.R : std::pow(double(cfg.x), 1.0 / 8.0);

    weight_spec spec;
    if (cfg.f_choice == "builtin") {
        spec = builtin_poly_weight(k, rep.R);
    } else if (cfg.f_choice == "mollifier") {
        spec = mollified_weight(k, rep.R, params_from_m(cfg.m));
    } else {
        throw domain_error("simulate: f choice must be 'builtin' or 'mollifier'");
    }
    lambda_table table = build_lambda_table(spec, rep.W);

    bool paired = (k % 2 == 0);
    for (int j = 0; j + 1 < k && paired; j += 2)
        if (rep.tuple[size_t(j) + 1] != rep.tuple[size_t(j)] + 2) paired = false;

    int k0 = k / 2;
    if (cfg.C2 > 0) {
        rep.C2 = cfg.C2;
    } else {
        double kk = double(std::max(k0, 1));
        rep.C2 = 1161.0 * kk * kk;
        if (kk > 1.5) rep.C2 /= params_from_k0(kk).gamma;
    }

    auto [hmin, hmax] = tuple_range(rep.tuple);
    u64 lo = u64(i64(cfg.x) + hmin), hi = u64(i64(2 * cfg.x) + hmax);
    factor_table ft(lo, hi);

    // square-full marks above w: count pairs (prime p > w, position) with p^2 | value
    std::vector<u8> sqmarks(static_cast<size_t>(hi - lo), 0);
    {
        u32 root = u32(std::sqrt(double(hi)) + 1);
        for (u32 p : primes_up_to(root)) {
            if (u64(p) <= cfg.w) continue;
            u64 pp = u64(p) * p;
            for (u64 v = ((lo + pp - 1) / pp) * pp; v < hi; v += pp) ++sqmarks[size_t(v - lo)];
        }
    }

    inner_eval inner(table);
    kahan_sum s0, sexcl, pos_r, pos_u;
    std::vector<kahan_sum> s1(static_cast<size_t>(k)), stau(static_cast<size_t>(k));
    double mlog3x = double(rep.m) * std::log(3.0 * double(cfg.x));
    for (u64 n = first_in_ap(cfg.x, rep.b % rep.W, rep.W); n < 2 * cfg.x; n += rep.W) {
        double s = inner(n, rep.tuple);
        if (s == 0.0) continue;
        double s2 = s * s;
        s0.add(s2);
        int marks = 0;
        for (int j = 0; j < k; ++j) {
            u64 v = u64(i64(n) + rep.tuple[size_t(j)]);
            if (ft.prime(v)) s1[size_t(j)].add(std::log(double(v)) * s2);
            stau[size_t(j)].add(double(ft.tau(v)) * s2);
            marks += sqmarks[size_t(v - lo)];
        }
        if (marks) sexcl.add(double(marks) * s2);
        if (paired) {
            double bracket = -mlog3x;
            bool sqfree_even = true;
            for (int j = 0; j + 1 < k; j += 2) {
                u64 odd = u64(i64(n) + rep.tuple[size_t(j)]);
                u64 even = u64(i64(n) + rep.tuple[size_t(j) + 1]);
                if (ft.prime(odd)) bracket += std::log(double(odd)) * (1.0 - double(ft.tau(even)) / rep.C2);
                if (!ft.squarefree(even)) sqfree_even = false;
            }
            pos_u.add(bracket * s2);
            if (sqfree_even) pos_r.add(bracket * s2);
        }
    }
    rep.S0 = s0.value();
    rep.Sexcl = sexcl.value();
    for (int j = 0; j < k; ++j) {
        rep.S1_j.push_back(s1[size_t(j)].value());
        rep.Stau_j.push_back(stau[size_t(j)].value());
    }
    if (paired) {
        rep.positivity_restricted = pos_r.value();
        rep.positivity_unrestricted = pos_u.value();
    }

    auto tt = thm_tt_prediction(double(cfg.x), rep.R, rep.W, k, spec, 1, cfg.mc_samples, cfg.seed,
                                cfg.threads);
    rep.tau_pred = tt.value;
    for (int j = 0; j < k; ++j)
        rep.ratio_tau_j.push_back(tt.value != 0.0 ? rep.Stau_j[size_t(j)] / tt.value : 0.0);
    if (k % 2 == 0) {
        auto sm = s_predictions(double(cfg.x), rep.R, rep.W, spec, cfg.mc_samples, cfg.seed,
                                cfg.threads);
        rep.S0_main = sm.S0_main;
        rep.S1_main = sm.S1_main;
        if (sm.S0_main != 0.0) rep.ratio_S0 = std::log(3.0 * double(cfg.x)) * rep.S0 / sm.S0_main;
        double s1_odd = 0.0;
        for (int j = 0; j < k; j += 2) s1_odd += rep.S1_j[size_t(j)];
        if (sm.S1_main != 0.0) rep.ratio_S1 = s1_odd / sm.S1_main;
    }
    return rep;
}

std::string sim_report_json(const sim_report& rep) {
    nlohmann::ordered_json j;
    j["x"] = rep.x;
    j["w"] = rep.w;
    j["w_asymptotic"] = rep.w_asymptotic;
    j["W"] = rep.W;
    j["b"] = rep.b;
    j["tuple"] = rep.tuple;
    j["R"] = rep.R;
    j["R_asymptotic"] = rep.R_asymptotic;
    j["R_asymptotic_exponent"] = rep.R_asymptotic_exponent;
    j["m"] = rep.m;
    j["C2"] = rep.C2;
    j["S0"] = rep.S0;
    j["S1_j"] = rep.S1_j;
    j["Stau_j"] = rep.Stau_j;
    j["Sexcl"] = rep.Sexcl;
    j["positivity"] = {{"restricted", rep.positivity_restricted},
                       {"unrestricted", rep.positivity_unrestricted}};
    auto opt = [](const std::optional<double>& v) {
        return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
    };
    j["predictions"] = {{"S0_main", opt(rep.S0_main)},
                        {"S1_main", opt(rep.S1_main)},
                        {"tau_main", opt(rep.tau_pred)}};
    j["ratios"] = {{"S0_log3x_over_main", opt(rep.ratio_S0)},
                   {"S1_over_main", opt(rep.ratio_S1)},
                   {"tau_j_over_main", rep.ratio_tau_j}};
    return j.dump(2) + "\n";
}

std::string sim_report_csv(const sim_report& rep) {
    std::ostringstream os;
    os.precision(12);
    os << "j,h_j,S1_j,Stau_j,ratio_tau_j\n";
    for (size_t j = 0; j < rep.S1_j.size(); ++j)
        os << (j + 1) << "," << rep.tuple[j] << "," << rep.S1_j[j] << "," << rep.Stau_j[j] << ","
           << (j < rep.ratio_tau_j.size() ? rep.ratio_tau_j[j] : 0.0) << "\n";
    return os.str();
}

}  // namespace skv
