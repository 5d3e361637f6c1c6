#include "sievekit/tau_ap.hpp"

#include <cmath>
#include <sstream>

#include "sievekit/arith.hpp"

namespace skv {

namespace {

constexpr double EULER_GAMMA = 0.57721566490153286061;

std::vector<u64> prime_factors_small(u64 q) {
    std::vector<u64> ps;
    for (u64 p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            ps.push_back(p);
            while (q % p == 0) q /= p;
        }
    }
    if (q > 1) ps.push_back(q);
    return ps;
}

bool squarefree_small(u64 q) {
    for (u64 p = 2; p * p <= q; ++p) {
        if (q % (p * p) == 0) return false;
        while (q % p == 0) q /= p;
    }
    return true;
}

}  // namespace

tau_ap_query::tau_ap_query(u64 x_, u64 q_, u64 a_) : x(x_), q(q_), a(a_) {
    if (x == 0) throw domain_error("tau_ap_query: x must be positive");
    if (q == 0) throw domain_error("tau_ap_query: q must be positive");
    if (!squarefree_small(q)) throw domain_error("tau_ap_query: q must be squarefree");
    a %= q;
}

std::vector<u64> tau_window_by_residue(u64 x, u64 q) {
    if (x == 0 || q == 0) throw domain_error("tau_window_by_residue: x and q must be positive");
    if (x > (u64(1) << 40)) throw resource_error("tau_window_by_residue: x too large for exact pass");
    std::vector<u64> bucket(size_t(q), 0);
    // tau(n) = #{(d,e): de = n}; count d <= e and double the off-diagonal
    for (u64 d = 1; d * d < 2 * x; ++d) {
        u64 lo = std::max(x, d * d);
        u64 start = ((lo + d - 1) / d) * d;
        for (u64 m = start; m < 2 * x; m += d) {
            bucket[size_t(m % q)] += (m == d * d) ? 1 : 2;
        }
    }
    return bucket;
}

u64 tau_sum_exact(const tau_ap_query& query) {
    return tau_window_by_residue(query.x, query.q)[size_t(query.a % query.q)];
}

double tau_sum_main_term(const tau_ap_query& query) {
    u64 q = query.q;
    u64 r = (query.a == 0) ? q : gcd_u64(query.a, q);
    u64 s = q / r;
    double dens = 1.0;
    double add = std::log(double(query.x)) + 2.0 * std::log(2.0) + 2.0 * EULER_GAMMA - 1.0;
    for (u64 p : prime_factors_small(s)) {
        double pd = double(p);
        dens *= (pd - 1.0) / (pd * pd);  // phi(s)/s^2 built prime by prime (s squarefree)
        add += 2.0 * std::log(pd) / (pd - 1.0);
    }
    for (u64 p : prime_factors_small(r)) {
        double pd = double(p);
        dens *= (2.0 * pd - 1.0) / (pd * pd);
        add -= 2.0 * (pd - 1.0) * std::log(pd) / (2.0 * pd - 1.0);
    }
    return double(query.x) * dens * add;
}

tau_scan_report tau_sum_error_scan(const std::vector<u64>& x_list, const std::vector<u64>& q_list,
                                   residue_mode mode, double flag_threshold) {
    for (u64 q : q_list)
        if (q == 0 || !squarefree_small(q)) throw domain_error("tau_sum_error_scan: q values must be positive squarefree");
    tau_scan_report rep;
    kahan_sum errsum;
    u64 rows = 0;
    for (u64 x : x_list) {
        for (u64 q : q_list) {
            auto buckets = tau_window_by_residue(x, q);
            for (u64 a = 0; a < q; ++a) {
                if (mode == residue_mode::coprime && gcd_u64(a, q) != 1) continue;
                if (mode == residue_mode::zero && a != 0) continue;
                tau_ap_query qu(x, q, a);
                double main = tau_sum_main_term(qu);
                u64 exact = buckets[size_t(a)];
                double rel = exact ? std::abs(main - double(exact)) / double(exact)
                                   : std::abs(main);
                tau_scan_row row{x, q, a, (a == 0) ? q : gcd_u64(a, q), exact, main, rel, rel > flag_threshold};
                rep.worst_rel_err = std::max(rep.worst_rel_err, rel);
                errsum.add(rel);
                ++rows;
                rep.rows.push_back(row);
            }
        }
    }
    rep.mean_rel_err = rows ? errsum.value() / double(rows) : 0.0;
    return rep;
}

std::string tau_scan_csv(const tau_scan_report& rep) {
    std::ostringstream os;
    os << "x,q,a,r,exact,main,rel_err\n";
    os.precision(12);
    for (const auto& row : rep.rows)
        os << row.x << "," << row.q << "," << row.a << "," << row.r << "," << row.exact << ","
           << row.main << "," << row.rel_err << "\n";
    return os.str();
}

}  // namespace skv
