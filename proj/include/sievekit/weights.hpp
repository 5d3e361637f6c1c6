#pragma once
#include <array>
#include <vector>

#include "sievekit/common.hpp"
#include "sievekit/mc.hpp"
#include "sievekit/params.hpp"

namespace skv {

// sieve weight: a smooth f on k-tuples supported on the unit simplex, plus the
// truncation level R; builtin variant also carries closed forms for its density
// F = (d^k/dt_1..dt_k) f and the three simplex functionals
struct weight_spec {
    enum class origin { builtin_poly, mollified, user };
    int k = 0;
    double R = 0;
    origin provenance = origin::user;
    field_fn f;          // the sieve weight itself
    field_fn density;    // F = mixed k-th partial of f (builtin: closed form; mollified: the product form itself)
    field_fn density_G;  // dF/dt_m at m = last coordinate (analytic when known)
    bool has_exact = false;
    double alpha_exact = 0, beta1_exact = 0, beta2_exact = 0;
    double density_sq_exact = 0;  // integral of F^2 over the unit simplex
    double avg_sq_exact = 0;      // integral over the (k-1)-simplex of (integral of F dt_k)^2
};

// f(t) = (1 - t_1 - ... - t_k)^(k+1) on the simplex; F = (-1)^k (k+1)! (1 - sum t);
// alpha = (k+1)!, beta1 = 2((k+1)!)^2/(k+2)!, beta2 = -((k+1)!)^2/(k+2)!
weight_spec builtin_poly_weight(int k, double R = 0.0);

// the smooth product mollifier used as the weight; its own form doubles as the
// density for prediction purposes (no closed-form mixed partial exists)
weight_spec mollified_weight(int k, double R, const sieve_params& p);

// sampled invariants: f vanishes outside the simplex and stays bounded on it
void verify_weight_support(const weight_spec& spec, u64 seed = 0, int samples = 20000);

struct lambda_entry {
    std::array<u32, 8> idx;  // positions into lambda_table::cands, first k used
    double lam;
};

// all k-tuples (d_1,...,d_k) of squarefree W-coprime moduli with product <= R,
// with lam = f(log d_1/log R, ..., log d_k/log R) * prod mu(d_j)
struct lambda_table {
    weight_spec spec;
    u64 W = 0;
    std::vector<u64> cands;
    std::vector<int> cand_mu;
    std::vector<lambda_entry> entries;
};

lambda_table build_lambda_table(const weight_spec& spec, u64 W);

// lambda for explicit moduli; exactly the expression stored in table entries
double lambda_value(const weight_spec& spec, const u64* d, const int* mu, int k);

// squarefree test and Mobius value by trial division (small arguments)
bool is_squarefree_small(u64 n);
int mobius_small(u64 n);
u64 euler_phi_small(u64 n);

}  // namespace skv
