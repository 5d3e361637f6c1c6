#pragma once
#include <string>
#include <vector>

#include "sievekit/common.hpp"

namespace skv {

// derived constants of the sieve parameter chain, all driven by the level m >= 1:
//   k0 = m^2 exp(8m+8),  A = log(2k0) - 2 log log(2k0),  T = (e^A - 1)/A,
//   gamma = (1/A)(1 - 1/(1+AT)),  delta1 = 1/(4.5 k0 log k0),  delta2 = delta1 T / 10,
//   delta3 = 1e-3,  R_exponent = 1/4 - 1/(1000 m)
struct sieve_params {
    int m = 0;
    double k0_real = 0;
    u64 k0_int = 0;           // ceil(k0_real); valid only when it fits u64
    bool k0_int_valid = false;
    double A = 0, T = 0, gamma = 0;
    double delta1 = 0, delta2 = 0, delta3 = 0;
    double R_exponent = 0;
};

sieve_params params_from_m(int m);

// same chain driven by a raw k0 (m left 0, R_exponent unset); for probing the
// conditions at values the m-chain never visits
sieve_params params_from_k0(double k0);

// per-coordinate integral of (1 + 2kAt)^-2 over [0, T/(2k)]
double one_dim_integral(double k, double A, double T);
double one_dim_integral_quad(double k, double A, double T);  // adaptive Simpson cross-check

// 1 - A/(e^A - 1) - e^A/(2 k0): positive iff the truncated density has mass to spare
double truncation_margin(const sieve_params& p);
bool truncation_condition(const sieve_params& p);

// log of (gamma/(2k0))^(2k0): upper bound for the squared-density integral
double density_sq_upper_log(const sieve_params& p);

// log of ((A-2)/(2k0)) * (gamma/(2k0))^(2k0): lower bound for the inner-average
// functional; requires truncation_condition and A > 2
double inner_avg_lower_log(const sieve_params& p);

struct bound_breakdown {
    double terms[4];
    double coefficient;  // sum of the four terms; must stay <= 8.98
    double log_total;    // log(coefficient) + (2k0-1) log(gamma/(2k0))
};
bound_breakdown alpha_upper(const sieve_params& p);

struct simple_bound {
    double coefficient;  // 18/(k0 A)
    double log_total;
};
simple_bound beta2_upper(const sieve_params& p);

// cap on big_omega(p+2) forced by tau(p+2) < C2 = 1161 k0^2 / gamma: 2^omega <= tau
struct omega_cap_result {
    double C2;
    double cap_real;  // log2(C2)
    i64 cap_int;      // floor(cap_real)
    double bound;     // 16m/log2 + 5 log(m)/log2 + 36.9
    bool within_bound;
};
omega_cap_result omega_cap(int m);

// same shape for the variant constant C3 = 512 k0^3 log k0
struct omega_cap_remark_result {
    double C3;
    double cap;
    double bound;  // 3 log2(k0) + log2(log k0) + 9
    bool within_bound;
};
omega_cap_remark_result omega_cap_remark(double k0);

struct audit_row {
    std::string name;
    std::string claim;
    double lhs, rhs;
    std::string verdict;  // "pass" | "fail" | "report"
    bool pass;            // report rows record sign health here
};

struct audit_report {
    int m;
    sieve_params params;
    std::vector<audit_row> rows;
    bool all_pass;  // over the checked rows only (report rows excluded)
};

std::vector<audit_report> inequality_audit(int m_lo, int m_hi);

}  // namespace skv
