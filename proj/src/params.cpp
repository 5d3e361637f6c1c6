#include "sievekit/params.hpp"

#include <cmath>

#include "sievekit/quad.hpp"

namespace skv {

namespace {

void fill_chain(sieve_params& p, double k0) {
    if (!(k0 > 1.0)) throw domain_error("parameter chain: need k0 > 1");
    p.k0_real = k0;
    p.A = std::log(2.0 * k0) - 2.0 * std::log(std::log(2.0 * k0));
    p.T = std::expm1(p.A) / p.A;
    p.gamma = (1.0 - 1.0 / (1.0 + p.A * p.T)) / p.A;
    p.delta1 = 1.0 / (4.5 * k0 * std::log(k0));
    p.delta2 = p.delta1 * p.T / 10.0;
    p.delta3 = 1e-3;
    if (k0 < 9.0e18) {
        p.k0_int = u64(std::ceil(k0));
        p.k0_int_valid = true;
    } else {
        p.k0_int = 0;
        p.k0_int_valid = false;
    }
}

}  // namespace

sieve_params params_from_m(int m) {
    if (m < 1) throw domain_error("params_from_m: m must be >= 1");
    sieve_params p;
    p.m = m;
    double dm = double(m);
    fill_chain(p, dm * dm * std::exp(8.0 * dm + 8.0));
    p.R_exponent = 0.25 - 1.0 / (1000.0 * dm);
    return p;
}

sieve_params params_from_k0(double k0) {
    sieve_params p;
    fill_chain(p, k0);
    return p;
}

double one_dim_integral(double k, double A, double T) {
    if (!(k > 0) || !(A > 0) || !(T > 0)) throw domain_error("one_dim_integral: need k, A, T > 0");
    return (1.0 - 1.0 / (1.0 + A * T)) / (2.0 * k * A);
}

double one_dim_integral_quad(double k, double A, double T) {
    if (!(k > 0) || !(A > 0) || !(T > 0)) throw domain_error("one_dim_integral_quad: need k, A, T > 0");
    double tk = 2.0 * k;
    return adaptive_simpson([tk, A](double t) {
        double u = 1.0 + tk * A * t;
        return 1.0 / (u * u);
    }, 0.0, T / tk, 1e-14);
}

double truncation_margin(const sieve_params& p) {
    return 1.0 - p.A / std::expm1(p.A) - std::exp(p.A) / (2.0 * p.k0_real);
}

bool truncation_condition(const sieve_params& p) { return truncation_margin(p) > 0.0; }

double density_sq_upper_log(const sieve_params& p) {
    return 2.0 * p.k0_real * (std::log(p.gamma) - std::log(2.0 * p.k0_real));
}

double inner_avg_lower_log(const sieve_params& p) {
    if (!truncation_condition(p) || !(p.A > 2.0))
        throw domain_error("inner_avg_lower_log: requires positive truncation margin and A > 2");
    return density_sq_upper_log(p) + std::log(p.A - 2.0) - std::log(2.0 * p.k0_real);
}

bound_breakdown alpha_upper(const sieve_params& p) {
    // the delta3 ramp contributes (3 + 7*delta3)/2 bounded here by the literal 3.01/2;
    // that literal needs 7*delta3 <= 0.01
    if (!(p.delta3 > 0) || p.delta3 > 0.01 / 7.0)
        throw domain_error("alpha_upper: delta3 too large for the fixed 3.01 literal");
    double k0 = p.k0_real, lk = std::log(k0);
    bound_breakdown b;
    b.terms[0] = 3.01 / (5.5 * p.delta1 * k0 * lk);
    b.terms[1] = 3.01 * 1.5 * lk / (2.0 * p.delta2 * k0);
    b.terms[2] = 3.01 / 2.0;
    b.terms[3] = 3.0 / 6.0;
    b.coefficient = b.terms[0] + b.terms[1] + b.terms[2] + b.terms[3];
    b.log_total = std::log(b.coefficient) + (2.0 * k0 - 1.0) * (std::log(p.gamma) - std::log(2.0 * k0));
    return b;
}

simple_bound beta2_upper(const sieve_params& p) {
    simple_bound b;
    b.coefficient = 18.0 / (p.k0_real * p.A);
    b.log_total = std::log(b.coefficient) +
                  (2.0 * p.k0_real - 1.0) * (std::log(p.gamma) - std::log(2.0 * p.k0_real));
    return b;
}

omega_cap_result omega_cap(int m) {
    if (m < 1) throw domain_error("omega_cap: m must be >= 1");
    sieve_params p = params_from_m(m);
    const double L2 = std::log(2.0);
    omega_cap_result r;
    r.cap_real = (std::log(1161.0) + 2.0 * std::log(p.k0_real) - std::log(p.gamma)) / L2;
    r.C2 = std::exp(r.cap_real * L2);  // may overflow to inf for huge m; cap_real stays finite
    r.cap_int = i64(std::floor(r.cap_real));
    r.bound = 16.0 * m / L2 + 5.0 * std::log(double(m)) / L2 + 36.9;
    r.within_bound = r.cap_real <= r.bound;
    return r;
}

omega_cap_remark_result omega_cap_remark(double k0) {
    if (!(k0 > 1.0)) throw domain_error("omega_cap_remark: need k0 > 1");
    const double L2 = std::log(2.0);
    omega_cap_remark_result r;
    double lk = std::log(k0);
    r.cap = (std::log(512.0) + 3.0 * lk + std::log(lk)) / L2;
    r.C3 = 512.0 * k0 * k0 * k0 * lk;
    r.bound = 3.0 * lk / L2 + std::log(lk) / L2 + 9.0;
    r.within_bound = r.cap <= r.bound + 1e-9;  // equal in exact algebra (512 = 2^9)
    return r;
}

namespace {

audit_row checked(std::string name, std::string claim, double lhs, double rhs, bool pass) {
    return {std::move(name), std::move(claim), lhs, rhs, pass ? "pass" : "fail", pass};
}

audit_row reported(std::string name, std::string claim, double lhs, double rhs, bool healthy) {
    return {std::move(name), std::move(claim), lhs, rhs, "report", healthy};
}

}  // namespace

std::vector<audit_report> inequality_audit(int m_lo, int m_hi) {
    if (m_lo < 1 || m_lo > m_hi || m_hi > 30)
        throw domain_error("inequality_audit: need 1 <= m_lo <= m_hi <= 30");
    std::vector<audit_report> out;
    for (int m = m_lo; m <= m_hi; ++m) {
        sieve_params p = params_from_m(m);
        double k0 = p.k0_real, lk = std::log(k0);
        const double L2 = std::log(2.0);
        audit_report rep;
        rep.m = m;
        rep.params = p;
        auto& rows = rep.rows;

        rows.push_back(checked("i", "A > 0.69 log k0", p.A, 0.69 * lk, p.A > 0.69 * lk));
        rows.push_back(checked("ii", "delta2 >= log k0 / (2 k0)", p.delta2, lk / (2.0 * k0),
                               p.delta2 >= lk / (2.0 * k0)));
        rows.push_back(checked("iii", "log(2k0) - 2 log log(2k0) >= 8m + 3", p.A, 8.0 * m + 3.0,
                               p.A >= 8.0 * m + 3.0));
        {
            double lhs = 1.0 - 2.25 * k0 * p.delta1;  // = 1 - 0.5/log k0
            double rhs = (p.A - 2.5) / (p.A - 2.0);
            rows.push_back(checked("iv", "1 - 2.25 k0 delta1 >= (A - 2.5)/(A - 2)", lhs, rhs, lhs >= rhs));
        }
        {
            // both sides in log space to survive the 2k0-th powers
            double lhs = (2.0 * k0 + 1.0) * (std::log1p(-p.delta1) + std::log1p(-p.delta2 / p.T));
            double rhs = std::log1p(-2.24 * k0 * p.delta1);
            rows.push_back(checked("v", "(1-d1)^{2k0+1} (1-d2/T)^{2k0+1} >= 1 - 2.24 k0 d1 (log scale)",
                                   lhs, rhs, lhs >= rhs));
        }
        {
            double margin = truncation_margin(p);
            rows.push_back(checked("vi", "1 - A/(e^A - 1) - e^A/(2 k0) > 0", margin, 0.0, margin > 0.0));
        }
        {
            double lhs1 = lk / L2 - 8.0 * m / L2 - 2.0 * std::log(double(m)) / L2;
            rows.push_back(checked("vii.1", "log2 k0 - 8m/log2 - 2 log(m)/log2 <= 11.6", lhs1, 11.6,
                                   lhs1 <= 11.6));
            double lhs2 = -std::log(p.gamma) / L2 - std::log(double(m)) / L2;
            rows.push_back(checked("vii.2", "-log2(gamma) - log2(m) <= 3.5", lhs2, 3.5, lhs2 <= 3.5));
        }
        {
            auto a = alpha_upper(p);
            rows.push_back(checked("viii", "alpha coefficient term-sum <= 8.98", a.coefficient, 8.98,
                                   a.coefficient <= 8.98));
        }
        {
            double mult = 1.0 / p.R_exponent;  // exact log x / log R
            rows.push_back(reported("ix", "log x / log R multiplier vs quoted 4.001", mult, 4.001, mult > 0));
            double final_expr = (8.0 * m + 0.5) / 2.0 - m * mult;
            rows.push_back(reported("x", "(8m + 0.5)/2 - m (log x / log R) vs quoted 0.249", final_expr,
                                    0.249, final_expr > 0));
        }
        rep.all_pass = true;
        for (const auto& r : rows)
            if (r.verdict == "fail") rep.all_pass = false;
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace skv
