#include "sievekit/factor_table.hpp"

#include <cmath>

#include "sievekit/arith.hpp"

namespace skv {

factor_table::factor_table(u64 lo, u64 hi) : lo_(lo), hi_(hi) {
    if (lo < 1 || lo >= hi) throw domain_error("factor_table: need 1 <= lo < hi");
    u64 n = hi - lo;
    // ~35 bytes per element across the six arrays
    if (n > mem_budget() / 35) throw resource_error("factor_table: window exceeds memory budget");
    std::vector<u64> rem(static_cast<size_t>(n));
    spf_.assign(size_t(n), 0);
    phi_.assign(size_t(n), 1);
    tau_.assign(size_t(n), 1);
    mu_.assign(size_t(n), 1);
    omega_.assign(size_t(n), 0);
    for (u64 i = 0; i < n; ++i) rem[size_t(i)] = lo + i;

    u64 root = u64(std::sqrt(double(hi - 1))) + 2;
    while (root > 2 && (root - 1) * (root - 1) >= hi) --root;
    if (root > (u64(1) << 31)) throw resource_error("factor_table: window bound too large");
    auto base = primes_up_to(u32(root));

    for (u32 p : base) {
        u64 start = ((lo + p - 1) / p) * u64(p);
        for (u64 m = start; m < hi; m += p) {
            size_t i = size_t(m - lo);
            int e = 0;
            u64 pe = 1;
            while (rem[i] % p == 0) { rem[i] /= p; ++e; pe *= p; }
            if (spf_[i] == 0) spf_[i] = p;
            phi_[i] *= pe / p * (p - 1);
            tau_[i] *= u32(e + 1);
            mu_[i] = (e > 1) ? 0 : (signed char)(-mu_[i]);
            omega_[i] = u8(omega_[i] + e);
        }
    }
    for (u64 i = 0; i < n; ++i) {
        size_t s = size_t(i);
        u64 r = rem[s];
        if (r > 1) {  // leftover prime factor above the root
            if (spf_[s] == 0) spf_[s] = r;
            phi_[s] *= r - 1;
            tau_[s] *= 2;
            mu_[s] = (signed char)(-mu_[s]);
            omega_[s] = u8(omega_[s] + 1);
        }
        if (spf_[s] == 0) spf_[s] = lo + i;  // n = 1
    }
}

}  // namespace skv
