#pragma once
#include <string>
#include <vector>

#include "sievekit/common.hpp"

namespace skv {

// sum of tau(n) over a dyadic window x <= n < 2x restricted to n = a (mod q)
struct tau_ap_query {
    u64 x, q, a;
    tau_ap_query(u64 x_, u64 q_, u64 a_);  // enforces q >= 1 squarefree, a normalized mod q
};

// exact window sums for every residue class mod q at once (one divisor-pair pass)
std::vector<u64> tau_window_by_residue(u64 x, u64 q);

u64 tau_sum_exact(const tau_ap_query& query);

// leading term of the window sum: x * (density factor) * (log x + additive constant),
// both depending on r = gcd(a, q) (r = q when a = 0) and s = q / r
double tau_sum_main_term(const tau_ap_query& query);

struct tau_scan_row {
    u64 x, q, a, r;
    u64 exact;
    double main;
    double rel_err;
    bool flagged;
};

enum class residue_mode { all, coprime, zero };

struct tau_scan_report {
    std::vector<tau_scan_row> rows;
    double worst_rel_err = 0.0;
    double mean_rel_err = 0.0;
};

tau_scan_report tau_sum_error_scan(const std::vector<u64>& x_list, const std::vector<u64>& q_list,
                                   residue_mode mode, double flag_threshold);

std::string tau_scan_csv(const tau_scan_report& rep);

}  // namespace skv
