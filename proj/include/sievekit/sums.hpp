#pragma once
#include <optional>
#include <string>
#include <vector>

#include "sievekit/common.hpp"
#include "sievekit/weights.hpp"

namespace skv {

// per-n weight applied to the squared lambda sum
struct sum_weight {
    enum class kind { one, theta, tau, sqfree_excl } w = kind::one;
    int j = 1;   // 1-based coordinate for theta/tau/sqfree_excl
    u64 p = 0;   // prime for sqfree_excl (adds the condition p^2 | n + h_j)
};

// sum over n in [x, 2x), n = b (mod W), of weight(n) * (sum_{d_j | n+h_j} lambda)^2,
// evaluated termwise
double weighted_sum_direct(u64 x, const std::vector<i64>& tuple, u64 b, u64 W,
                           const lambda_table& table, sum_weight weight, int threads = 1);

// same sum rearranged over pairs of entry tuples with pairwise-coprimality
// constraints and exact counts of n in each residue class; weight in {one, tau};
// must agree with the direct evaluation to 1e-9 relative
double weighted_sum_bilinear(u64 x, const std::vector<i64>& tuple, u64 b, u64 W,
                             const lambda_table& table, sum_weight weight);

// main term of the tau-twisted squared-sum asymptotic:
//   (log x/log R * alpha - beta1 + 4 beta2) * x/(log R)^k * W^(k-1)/phi(W)^k
struct tt_prediction {
    double alpha, beta1, beta2;
    double alpha_se = 0, beta1_se = 0, beta2_se = 0;  // zero when closed-form
    double value;
};
tt_prediction thm_tt_prediction(double x, double R, u64 W, int k, const weight_spec& spec,
                                int m_index, u64 mc_samples = 400000, u64 seed = 0, int threads = 1);

// main terms of the theta-weighted sum (k0 x/(log R)^(k-1) * ... * avg-square integral)
// and of the log(3x)-weighted plain square (x log x/(log R)^k * ... * square integral),
// k = 2 k0 even
struct s_mains {
    double S1_main, S0_main;
    double avg_sq_integral, density_sq_integral;
};
s_mains s_predictions(double x, double R, u64 W, const weight_spec& spec, u64 mc_samples = 400000,
                      u64 seed = 0, int threads = 1);

// the paired-tuple selector sum: over n = b (mod W) in [x, 2x),
//   [ sum_j theta(n+h_{2j-1}) (1 - tau(n+h_{2j})/C2) - m log(3x) ] * (lambda sum)^2,
// restricted variant requires n + h_{2j} squarefree for every pair j
struct positivity_result {
    double restricted;
    double unrestricted;
    u64 b;
    u64 n_terms;  // count of n entering the unrestricted sum
};
positivity_result positivity_functional(u64 x, const std::vector<i64>& paired_tuple, int m,
                                        double C2, const lambda_table& table);

struct sim_report {
    u64 x = 0;
    u64 w = 0, W = 0, b = 0;
    double w_asymptotic = 0;  // log log log x, recorded next to the knob actually used
    std::vector<i64> tuple;
    double R = 0, R_asymptotic = 0, R_asymptotic_exponent = 0;
    int m = 1;
    double C2 = 0;
    double S0 = 0;                    // plain squared-sum
    std::vector<double> S1_j;         // theta-weighted, per coordinate
    std::vector<double> Stau_j;       // tau-weighted, per coordinate
    double Sexcl = 0;                 // square-full excluded mass, summed over (j, p > w)
    double positivity_restricted = 0, positivity_unrestricted = 0;
    // predictions (k even only) and ratios computed/predicted
    std::optional<double> S0_main, S1_main, tau_pred;
    std::optional<double> ratio_S0, ratio_S1;
    std::vector<double> ratio_tau_j;
};

struct sim_config {
    u64 x = 100000;
    u64 w = 5;
    double R = 0;  // 0: default x^(1/8)
    std::vector<i64> tuple;
    std::string f_choice = "builtin";  // builtin | mollifier
    int m = 1;
    double C2 = 0;  // 0: default 1161 k0^2 / gamma with k0 = k/2 when k even, else k
    u64 seed = 0;
    u64 mc_samples = 400000;
    int threads = 1;
};

sim_report simulate(const sim_config& cfg);
std::string sim_report_json(const sim_report& rep);
std::string sim_report_csv(const sim_report& rep);  // per-coordinate sums

}  // namespace skv
