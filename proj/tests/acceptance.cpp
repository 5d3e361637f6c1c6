// Acceptance gate: one PASS/FAIL line per criterion, exit 0 only if nothing failed.
// The slow twin-census criterion runs only with --slow; it prints SKIP otherwise.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "sievekit/admissible.hpp"
#include "sievekit/arith.hpp"
#include "sievekit/mc.hpp"
#include "sievekit/mollifier.hpp"
#include "sievekit/params.hpp"
#include "sievekit/sums.hpp"
#include "sievekit/tau_ap.hpp"
#include "sievekit/weights.hpp"

using namespace skv;

namespace {

int g_threads = 1;
int g_fails = 0;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

template <class Fn>
void run(int id, double budget_s, Fn body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool within = secs <= budget_s;
    if (!within) detail += " (over time budget)";
    bool pass = ok && within;
    if (!pass) ++g_fails;
    std::printf("CRITERION %d %s - %s [%.2fs / %.0fs]\n", id, pass ? "PASS" : "FAIL", detail.c_str(),
                secs, budget_s);
    std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
    bool slow = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--slow") == 0) slow = true;
        else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) g_threads = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: %s [--slow] [--threads N]\n", argv[0]);
            return 1;
        }
    }
    if (g_threads < 1) g_threads = 1;

    run(1, 1.0, [](std::string& d) {
        auto c = omega_cap(1);
        bool ok = c.cap_real > 59.5 && c.cap_real < 60.0 && c.cap_int == 59 &&
                  c.cap_real <= 16.0 / std::log(2.0) + 36.9;
        d = "divisor cap at m=1: cap_real=" + fmt(c.cap_real) + " in (59.5,60), cap_int=" +
            std::to_string(c.cap_int) + ", bound=" + fmt(16.0 / std::log(2.0) + 36.9);
        return ok;
    });

    run(2, 1.0, [](std::string& d) {
        bool ok = true;
        double worst = 0.0;
        for (int m = 1; m <= 10; ++m) {
            auto p = params_from_m(m);
            double eA = std::exp(p.A);
            double l2k = std::log(2.0 * p.k0_real);
            double resid = std::abs(1.0 + p.A * p.T - 2.0 * p.k0_real / (l2k * l2k)) / eA;
            worst = std::max(worst, resid);
            ok = ok && resid <= 1e-12;
            ok = ok && p.A > 0.69 * std::log(p.k0_real);
            ok = ok && p.delta2 >= std::log(p.k0_real) / (2.0 * p.k0_real);
        }
        d = "parameter chain m=1..10: closure identity residual <= " + fmt(worst) +
            " (cap 1e-12); A > 0.69 log k0 and delta2 >= log k0/(2 k0) throughout";
        return ok;
    });

    run(3, 1.0, [](std::string& d) {
        auto reps = inequality_audit(1, 10);
        bool ok = reps.size() == 10;
        double ixl = 0, ixr = 0, xl = 0, xr = 0;
        bool xpos = false;
        for (size_t mi = 0; mi < reps.size(); ++mi) {
            for (const auto& row : reps[mi].rows) {
                if (row.name == "ix" || row.name == "x") {
                    ok = ok && row.verdict == "report";
                    if (mi == 0 && row.name == "ix") { ixl = row.lhs; ixr = row.rhs; }
                    if (mi == 0 && row.name == "x") { xl = row.lhs; xr = row.rhs; xpos = row.pass; }
                } else {
                    ok = ok && row.verdict == "pass";
                }
            }
        }
        ok = ok && ixl > 4.0 && ixl < 4.1 && xl > 0.2 && xl < 0.3 && xpos;
        d = "audit rows i..viii pass for m=1..10; at m=1 row ix reports " + fmt(ixl) +
            " against " + fmt(ixr) + " and row x reports " + fmt(xl) + " against " + fmt(xr) +
            ", final expression positive";
        return ok;
    });

    run(4, 60.0, [](std::string& d) {
        struct cfg {
            int k;
            std::vector<i64> tup;
            double R;
            u64 W, b, x;
            sum_weight w;
        };
        std::vector<cfg> cfgs{
            {1, {0}, 10.0, 6, 1, 100, {}},
            {3, {0, 2, 6}, 20.0, 30, 11, 50000, {}},
            {2, {0, 2}, 12.0, 6, 5, 10000, {sum_weight::kind::tau, 1, 0}},
        };
        double worst = 0.0;
        for (const auto& c : cfgs) {
            auto spec = builtin_poly_weight(c.k, c.R);
            auto tab = build_lambda_table(spec, c.W);
            double dv = weighted_sum_direct(c.x, c.tup, c.b, c.W, tab, c.w, g_threads);
            double bv = weighted_sum_bilinear(c.x, c.tup, c.b, c.W, tab, c.w);
            worst = std::max(worst, std::abs(dv - bv) / std::max(std::abs(dv), std::abs(bv)));
        }
        d = "bilinear rearrangement vs direct evaluation on 3 configurations: worst relative gap " +
            fmt(worst) + " (cap 1e-9)";
        return worst <= 1e-9;
    });

    run(5, 60.0, [](std::string& d) {
        double worst_sig = 0.0, worst_se = 0.0;
        bool ok = true;
        for (int k = 2; k <= 4; ++k) {
            auto spec = builtin_poly_weight(k);
            struct probe {
                mc_mode mode;
                double exact;
            } probes[] = {{mc_mode::t_gm_sq, spec.alpha_exact},
                          {mc_mode::t2_gm_sq, spec.beta1_exact},
                          {mc_mode::t_gm_f, spec.beta2_exact}};
            for (int i = 0; i < 3; ++i) {
                auto e = simplex_mc(spec.density, &spec.density_G, k, 1.0, probes[i].mode, 1000000,
                                    u64(500 + 10 * k + i), g_threads);
                double sig = std::abs(e.estimate - probes[i].exact) / e.stderr_;
                double relse = e.stderr_ / std::abs(probes[i].exact);
                worst_sig = std::max(worst_sig, sig);
                worst_se = std::max(worst_se, relse);
                ok = ok && sig <= 3.0 && relse <= 0.01;
            }
        }
        d = "sampled alpha/beta1/beta2 vs closed forms for k=2,3,4 at 10^6 points: worst deviation " +
            fmt(worst_sig) + " sigma (cap 3), worst stderr/value " + fmt(worst_se) + " (cap 0.01)";
        return ok;
    });

    run(6, 60.0, [](std::string& d) {
        auto p = params_from_m(1);
        mollifier mol(4, p);
        field_fn Fc = [&mol](const double* t, int) -> double { return mol.Fcirc(t); };
        auto e = simplex_mc(Fc, nullptr, 4, 1.0, mc_mode::f_sq, 1000000, 77, g_threads);
        double box = std::pow(p.gamma / 4.0, 4.0);
        bool ok1 = e.estimate <= box + 3.0 * e.stderr_;
        double cf = one_dim_integral(2.0, p.A, p.T);
        double qd = one_dim_integral_quad(2.0, p.A, p.T);
        double rel = std::abs(cf - qd) / std::abs(qd);
        bool ok2 = rel <= 1e-10;
        d = "sharp-cutoff square integral " + fmt(e.estimate) + " <= per-coordinate box bound " +
            fmt(box) + " + 3 sigma (" + fmt(3.0 * e.stderr_) + "); 1-D factor vs quadrature gap " +
            fmt(rel);
        return ok1 && ok2;
    });

    run(7, 120.0, [](std::string& d) {
        std::vector<u64> qs{1, 2, 3, 5, 6, 30};
        auto mid = tau_sum_error_scan({100000}, qs, residue_mode::all, 0.05);
        auto small = tau_sum_error_scan({10000}, qs, residue_mode::all, 1.0);
        auto big = tau_sum_error_scan({1000000}, qs, residue_mode::all, 1.0);
        bool ok = mid.worst_rel_err <= 0.05 && big.mean_rel_err < small.mean_rel_err;
        d = "divisor sums in progressions, all residues of q in {1,2,3,5,6,30}: worst relative error " +
            fmt(mid.worst_rel_err) + " at x=10^5 (cap 0.05); mean error " + fmt(small.mean_rel_err) +
            " at 10^4 -> " + fmt(big.mean_rel_err) + " at 10^6";
        return ok;
    });

    run(8, 10.0, [](std::string& d) {
        auto r1 = check_admissible({0, 2, 4});
        bool ok = !r1.admissible && r1.covering_prime == 3;
        auto r2 = check_admissible({0, 2, 6, 8, 12});
        ok = ok && r2.admissible;
        auto t = twin_paired_admissible(5);
        ok = ok && t.offsets.size() == 10;
        ok = ok && check_admissible(t.offsets).admissible;
        for (size_t j = 0; j + 1 < t.offsets.size(); j += 2)
            ok = ok && t.offsets[j + 1] == t.offsets[j] + 2;
        d = "{0,2,4} rejected (covering prime 3); {0,2,6,8,12} admissible; paired 10-tuple admissible"
            " with every even position 2 above its partner, diameter " +
            std::to_string(t.offsets.empty() ? 0 : diameter(t.offsets));
        return ok;
    });

    run(9, 300.0, [](std::string& d) {
        auto ratio_at = [](u64 x) {
            double R = std::cbrt(double(x));
            auto spec = builtin_poly_weight(2, R);
            auto tab = build_lambda_table(spec, 6);
            std::vector<i64> tup{0, 2};
            double direct =
                weighted_sum_direct(x, tup, 5, 6, tab, {sum_weight::kind::tau, 1, 0}, g_threads);
            auto tt = thm_tt_prediction(double(x), R, 6, 2, spec, 1);
            return direct / tt.value;
        };
        double r5 = ratio_at(100000);
        double r6 = ratio_at(1000000);
        bool ok = r6 >= 0.5 && r6 <= 2.0 && std::abs(r6 - 1.0) < std::abs(r5 - 1.0);
        d = "divisor-weighted sum over its predicted main term at R=x^(1/3): " + fmt(r5) +
            " at x=10^5 -> " + fmt(r6) + " at x=10^6 (in [0.5,2] and approaching 1)";
        return ok;
    });

    if (slow) {
        run(10, 900.0, [](std::string& d) {
            u64 cnt = count_twin_pairs_in(20000000ull, 2999999999ull, g_threads);
            d = "twin prime pairs inside [2x10^7, 3x10^9]: " + std::to_string(cnt) +
                " (needs >= 8886111)";
            return cnt >= 8886111ull;
        });
    } else {
        std::puts("CRITERION 10 SKIP - twin census over [2x10^7, 3x10^9] runs only with --slow");
    }

    if (g_fails == 0) {
        std::puts("acceptance: all executed criteria passed");
        return 0;
    }
    std::printf("acceptance: %d criteria failed\n", g_fails);
    return 2;
}
